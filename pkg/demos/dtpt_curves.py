"""DT/PT on monomial curves.

For a fixed Cohen-Macaulay monomial curve, the generating function of
subschemes of the curve's complement ideal (the DT side) factors as the
MacMahon function times the generating function of stable-pair quotients
(the PT side, realized as the Quot series of Ext^1 of the curve ideal).
"""

from boxquot.descriptions import fixture
from boxquot.verify import check_dtpt


def main():
    for name in ("line", "two-axes", "fat-line"):
        report = check_dtpt(fixture(name), 5)
        print(f"--- {name} ---")
        print(report.to_table())
        print()


if __name__ == "__main__":
    main()
