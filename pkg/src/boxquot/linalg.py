"""Small exact linear algebra over the rationals.

Matrices are lists of row lists with int/Fraction entries.  Everything here
operates on tiny matrices (graded pieces of complexes), so plain Gaussian
elimination with Fractions is both exact and fast enough.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form.  Returns (rref_rows, pivot_cols); zero rows
    are dropped."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[0])


def kernel_basis(rows, ncols):
    """Basis of the right kernel of the matrix (rows x ncols)."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def reduce_mod(v, red_rows, pivots):
    """Reduce v modulo the row space given in rref form."""
    v = [Fraction(x) for x in v]
    for row, p in zip(red_rows, pivots):
        if v[p] != 0:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def matvec(rows, v):
    return [sum(a * b for a, b in zip(row, v)) for row in rows]


class Subquotient:
    """A subquotient (Z + B)/B of an ambient Q-vector space, with a chosen
    basis and coordinate extraction.  Used for per-degree homology."""

    def __init__(self, cycle_vectors, boundary_vectors, dim_ambient):
        self.dim_ambient = dim_ambient
        self.b_red, self.b_pivots = rref(boundary_vectors) if boundary_vectors else ([], [])
        reduced = []
        for z in cycle_vectors:
            r = reduce_mod(z, self.b_red, self.b_pivots)
            if any(x != 0 for x in r):
                reduced.append(r)
        self.h_red, self.h_pivots = rref(reduced) if reduced else ([], [])
        # basis vectors are the rref rows themselves (still cycles mod B)
        self.basis = self.h_red

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, v):
        """Coordinates of [v] in the chosen basis; raises if v is not in
        Z + B."""
        r = reduce_mod(v, self.b_red, self.b_pivots)
        coords = []
        for row, p in zip(self.h_red, self.h_pivots):
            c = r[p]
            coords.append(c)
            if c != 0:
                r = [a - c * b for a, b in zip(r, row)]
        if any(x != 0 for x in r):
            raise ValueError("vector not in the subquotient")
        return coords
