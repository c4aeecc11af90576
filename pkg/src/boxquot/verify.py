"""Assemble both sides of each generating-function identity and report
agreement.

Every check computes its two sides through disjoint code paths (box
enumeration or the finite-field oracle on one side, series algebra on the
other); a check never derives one side from the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import oracle as _oracle
from .descriptions import DescriptionError, ModuleDescription, curve_ideal_of
from .modules import (BoxModule, MonomialPresentation, box_module_of_ideal,
                      direct_sum, ext1, ideal_presentation, is_cm_curve,
                      matlis_dual)
from .oracle import DEFAULT_PRIMES, OracleError, quot_euler_bruteforce
from .quot import colored_quot_series, count_quotients, quot_series
from .series import FinitePoly, TruncSeries, is_palindromic, macmahon, reciprocal_poly


@dataclass
class IdentityReport:
    identity: str
    order: int
    lhs: list
    rhs: list
    match: bool
    first_mismatch: object = None
    clipped_at: object = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "identity": self.identity,
            "order": self.order,
            "lhs": [str(c) for c in self.lhs],
            "rhs": [str(c) for c in self.rhs],
            "match": self.match,
            "first_mismatch": self.first_mismatch,
            "clipped_at": self.clipped_at,
            "notes": list(self.notes),
        }

    def to_table(self):
        width = max([len(str(c)) for c in self.lhs + self.rhs] + [4])
        lines = [f"identity: {self.identity}   order: {self.order}   "
                 f"match: {'yes' if self.match else 'NO'}"]
        if self.clipped_at is not None:
            lines.append(f"compared range clipped at n = {self.clipped_at}")
        if self.first_mismatch is not None:
            lines.append(f"first mismatch at exponent {self.first_mismatch}")
        header = "  n  " + " ".join(f"{n:>{width}}" for n in range(len(self.lhs)))
        lines.append(header)
        lines.append("  lhs " + " ".join(f"{c:>{width}}" for c in self.lhs))
        lines.append("  rhs " + " ".join(f"{c:>{width}}" for c in self.rhs))
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _compare(identity, lhs_series, rhs_series, notes, clipped_at=None):
    match, first, (lo, hi) = lhs_series.compare(rhs_series)
    return IdentityReport(
        identity=identity,
        order=hi,
        lhs=[lhs_series.coeff(k) for k in range(lo, hi + 1)],
        rhs=[rhs_series.coeff(k) for k in range(lo, hi + 1)],
        match=match,
        first_mismatch=first,
        clipped_at=clipped_at,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Building blocks per description kind


def _rank_of(desc):
    if desc.kind in ("ideal", "curve"):
        return 1
    if desc.kind in ("cokernel", "complex"):
        return desc.payload.rank()
    if desc.kind == "direct_sum":
        return sum(_rank_of(s) for s in desc.payload)
    raise DescriptionError(f"no well-defined rank for kind {desc.kind!r}")


def _lhs_box_module(desc, bound):
    """Box model of the module itself, when its fixed points are isolated."""
    if desc.kind in ("ideal", "curve"):
        return box_module_of_ideal(curve_ideal_of(desc), bound)
    if desc.kind == "direct_sum":
        return direct_sum([_lhs_box_module(s, bound) for s in desc.payload])
    if desc.kind == "finite_boxes":
        return desc.payload
    return None  # cokernel/complex: weight multiplicities, oracle territory


def _ext1_module(desc, bound):
    if desc.kind in ("ideal", "curve"):
        return ext1(ideal_presentation(curve_ideal_of(desc)), bound=bound)
    if desc.kind in ("cokernel", "complex"):
        return ext1(desc.payload, bound=bound)
    if desc.kind == "direct_sum":
        return direct_sum([_ext1_module(s, bound) for s in desc.payload])
    raise DescriptionError(f"Ext^1 undefined for kind {desc.kind!r}")


def _series_by_any_route(source, order, n_max, primes, workers, label, notes):
    """Quot series of a module: exact enumeration when fixed points are
    isolated, otherwise the brute-force oracle clipped at n_max."""
    if isinstance(source, BoxModule) and source.is_multiplicity_free():
        notes.append(f"{label}: fixed-point enumeration")
        return quot_series(source, order, workers=workers), None
    clip = min(order, n_max)
    notes.append(f"{label}: finite-field oracle (clipped at n = {clip}; "
                 "Euler characteristic = counting polynomial at 1)")
    counts = [quot_euler_bruteforce(source, n, primes=primes, n_max=n_max)
              for n in range(clip + 1)]
    return TruncSeries.from_coeffs(counts, order=clip), clip


# ---------------------------------------------------------------------------
# The checks


def check_main(desc, order, n_max=2, primes=DEFAULT_PRIMES, workers=1):
    """Quot series of M against MacMahon^rank times the Quot series of
    Ext^1(M, A)."""
    notes = []
    rank = _rank_of(desc)
    notes.append(f"rank {rank} read off the presentation")
    ext_mod = _ext1_module(desc, bound=order)  # raises on hd > 1
    lhs_source = _lhs_box_module(desc, order)
    if lhs_source is None:
        lhs_source = desc.payload  # presentation, routed to the oracle
    lhs, clip_l = _series_by_any_route(lhs_source, order, n_max, primes,
                                       workers, "lhs", notes)
    ext_series, clip_r = _series_by_any_route(ext_mod, order, n_max, primes,
                                              workers, "rhs Ext^1 factor", notes)
    rhs = macmahon(order, rank) * ext_series
    notes.append(f"rhs: MacMahon^{rank} times the Ext^1 Quot series")
    clips = [c for c in (clip_l, clip_r) if c is not None]
    clipped = min(clips) if clips else None
    if clipped is not None and clipped < 0:
        raise ValueError("compared range clipped to empty")
    return _compare("main", lhs, rhs, notes, clipped_at=clipped)


def check_dtpt(desc, order, workers=1):
    """DT/PT on a fixed monomial Cohen-Macaulay curve: ideal-sheaf counts
    against MacMahon times the stable-pair counts."""
    ideal = curve_ideal_of(desc)
    if not is_cm_curve(ideal):
        raise ValueError("profile does not define a Cohen-Macaulay curve")
    notes = []
    dt_module = box_module_of_ideal(ideal, order)
    dt = quot_series(dt_module, order, workers=workers)
    notes.append("lhs: staircase enumeration of monomial ideals inside I_C")
    pt_module = ext1(ideal_presentation(ideal), bound=order)
    pt = quot_series(pt_module, order, workers=workers)
    rhs = macmahon(order, 1) * pt
    notes.append("rhs: MacMahon times enumeration of stable-pair quotients")
    return _compare("dtpt", dt, rhs, notes)


def _finite_ext1(desc, bound):
    mod = _ext1_module(desc, bound=bound)
    if not mod.is_finite:
        raise ValueError("Ext^1 not finite: the module is not reflexive")
    return mod


def _quot_poly(module):
    d = len(module)
    return FinitePoly(tuple(count_quotients(module, n) for n in range(d + 1)))


def check_cor(desc_r, desc_rstar, bound=8):
    """Reciprocity P*_R = P_{R*} of the Ext^1 Quot polynomials, and
    palindromicity in rank 2."""
    notes = []
    er = _finite_ext1(desc_r, bound)
    ers = _finite_ext1(desc_rstar, bound)
    p_r = _quot_poly(er)
    p_rs = _quot_poly(ers)
    notes.append(f"P has degree {p_r.degree} = length of Ext^1")
    lhs_poly = reciprocal_poly(p_r)
    match = lhs_poly == p_rs
    rank = _rank_of(desc_r)
    if rank == 2:
        notes.append("rank 2: P is palindromic" if is_palindromic(p_r)
                     else "rank 2 but P is NOT palindromic")
        match = match and is_palindromic(p_r)
    size = max(p_r.degree, p_rs.degree)
    lhs = [lhs_poly.coeff(k) for k in range(size + 1)]
    rhs = [p_rs.coeff(k) for k in range(size + 1)]
    first = next((k for k in range(size + 1) if lhs[k] != rhs[k]), None)
    return IdentityReport("cor", size, lhs, rhs, match, first, None, notes)


def check_dual(module):
    """#Quot(E, n) = #Quot(E^D, d-n) for a finite module E of length d."""
    if isinstance(module, ModuleDescription):
        if module.kind != "finite_boxes":
            raise DescriptionError("check_dual needs a finite_boxes description")
        module = module.payload
    if not module.is_finite:
        raise ValueError("check_dual requires a genuinely finite module")
    d = len(module)
    dual = matlis_dual(module)
    notes = [f"length {d}; lengths of E and E^D agree: {len(dual) == d}"]
    lhs = [count_quotients(module, n) for n in range(d + 1)]
    rhs = [count_quotients(dual, d - n) for n in range(d + 1)]
    match = lhs == rhs and len(dual) == d
    first = next((k for k in range(d + 1) if lhs[k] != rhs[k]), None)
    return IdentityReport("dual", d, lhs, rhs, match, first, None, notes)


def check_locfree(rank, order, workers=1):
    """Colored enumeration of Quot(O^r) against the MacMahon power."""
    lhs = colored_quot_series(rank, order, workers=workers)
    rhs = macmahon(order, rank)
    notes = [f"lhs: order-ideal enumeration on {rank} colored copies of A",
             "rhs: product-formula expansion"]
    return _compare("locfree", lhs, rhs, notes)
