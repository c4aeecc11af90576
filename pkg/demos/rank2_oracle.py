"""The non-split rank-2 example, checked by finite-field counting.

R = coker(A -> A^3) by the column (x, y, z) is torsion free of rank 2 with
a single singular point; its Ext^1 is a length-one skyscraper, so the Quot
series of R should start like MacMahon^2 (1 + q).  R is not
multiplicity-free, so the counts come from the brute-force oracle: point
counts over several finite fields, interpolated as a polynomial in the
field size and evaluated at 1.
"""

from boxquot import macmahon, quot_euler_bruteforce
from boxquot.descriptions import fixture
from boxquot.series import TruncSeries


def main():
    pres = fixture("rank2-R").payload
    expected = macmahon(2, 2) * TruncSeries.from_coeffs([1, 1], order=2)
    print("expected (MacMahon^2 (1+q)):", expected.coeff_list())
    for primes in ((2, 3, 5), (3, 5, 7)):
        values = [quot_euler_bruteforce(pres, n, primes=primes)
                  for n in range(3)]
        print(f"oracle with primes {primes}: {values}")
    print()
    print("Ext^1 reciprocity for the same module:")
    from boxquot.verify import check_cor
    print(check_cor(fixture("rank2-R"), fixture("rank2-R")).to_table())


if __name__ == "__main__":
    main()
