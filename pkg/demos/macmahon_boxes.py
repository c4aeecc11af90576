"""Count plane partitions two ways.

The torus-fixed points of the punctual Hilbert scheme of C^3 are monomial
ideals, i.e. complements of plane partitions, so enumerating order ideals in
the box model of the ring must reproduce the MacMahon product expansion.
"""

from boxquot import macmahon, quot_series
from boxquot.quot import box_model_of_ring


def main():
    order = 8
    enumerated = quot_series(box_model_of_ring(order), order)
    product = macmahon(order)

    print(f"{'n':>3} {'order ideals':>14} {'product formula':>16}")
    for n in range(order + 1):
        print(f"{n:>3} {enumerated.coeff(n):>14} {product.coeff(n):>16}")
    print()
    print("series agree:", enumerated == product)

    print()
    print("colored versions, rank r = sum of r copies of the ring:")
    from boxquot import colored_quot_series
    for r in (2, 3):
        lhs = colored_quot_series(r, 4)
        print(f"  r={r}: {lhs.coeff_list()}  "
              f"(MacMahon^{r}: {macmahon(4, r).coeff_list()})")


if __name__ == "__main__":
    main()
