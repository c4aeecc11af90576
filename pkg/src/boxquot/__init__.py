"""boxquot: exact Euler-characteristic generating functions of Quot schemes
of fine-graded modules over C[x,y,z], by box counting."""

from .modules import (Box, BoxModule, CurveProfile, MonomialIdeal,
                      MonomialPresentation, box_module_of_ideal, curve_ideal,
                      direct_sum, ext1, ideal_presentation, is_cm_curve,
                      matlis_dual, resolve_ideal)
from .oracle import quot_euler_bruteforce
from .quot import (QuotFixedPoint, colored_quot_series, count_quotients,
                   enumerate_quotients, quot_series)
from .series import (FinitePoly, TruncSeries, is_palindromic, macmahon,
                     reciprocal_poly)
from .verify import (IdentityReport, check_cor, check_dtpt, check_dual,
                     check_locfree, check_main)

__all__ = [
    "Box", "BoxModule", "CurveProfile", "MonomialIdeal",
    "MonomialPresentation", "FinitePoly", "TruncSeries", "IdentityReport",
    "QuotFixedPoint", "box_module_of_ideal", "check_cor", "check_dtpt",
    "check_dual", "check_locfree", "check_main", "colored_quot_series",
    "count_quotients", "curve_ideal", "direct_sum", "enumerate_quotients",
    "ext1", "ideal_presentation", "is_cm_curve", "is_palindromic",
    "macmahon", "matlis_dual", "quot_euler_bruteforce", "quot_series",
    "reciprocal_poly", "resolve_ideal",
]
