"""Independent brute-force evaluation of e(Quot(M, n)) for small n.

Works for fine-graded modules whose weight spaces may have dimension > 1
(non-isolated torus-fixed loci).  For each prime p the homogeneous
submodules of colength n over F_p are counted by enumerating, stratum by
stratum, the subspace tuples closed under the variable actions.  The counts
are interpolated as a polynomial in p and evaluated at 1, which gives the
Euler characteristic of the fixed locus and hence of the Quot scheme.

The strata here are iterated Grassmannian bundles, so the point counts are
polynomial in p; an extra-prime consistency check guards that assumption.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import rank, rref
from .modules import UNIT_VECTORS, BoxModule, MonomialPresentation, _vadd, _vsub

DEFAULT_PRIMES = (2, 3, 5, 7)
DEFAULT_N_MAX = 3
DEFAULT_DIM_CAP = 14


class OracleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Graded modules with explicit action matrices


class GradedModule:
    """Weight spaces keyed by (weight, color) with rational action matrices
    for the three variables."""

    def __init__(self, dims, actions):
        self.dims = {k: d for k, d in dims.items() if d > 0}
        self.actions = actions  # (key, v) -> matrix dims[target] x dims[key]

    def action(self, key, v):
        return self.actions.get((key, v))

    @classmethod
    def from_box_module(cls, module):
        slots = {}
        for i, b in enumerate(module.boxes):
            slots.setdefault((b.weight, b.color), []).append(i)
        for lst in slots.values():
            lst.sort(key=lambda i: module.boxes[i].slot)
        row_of = {i: r for lst in slots.values() for r, i in enumerate(lst)}
        dims = {k: len(lst) for k, lst in slots.items()}
        actions = {}
        for v in range(3):
            for (i, j) in module.edges[v]:
                bi, bj = module.boxes[i], module.boxes[j]
                key = (bi.weight, bi.color)
                tgt = (bj.weight, bj.color)
                mat = actions.setdefault(
                    (key, v),
                    [[Fraction(0)] * dims[key] for _ in range(dims[tgt])])
                mat[row_of[j]][row_of[i]] = Fraction(1)
        return cls(dims, actions)

    @classmethod
    def from_presentation(cls, pres, extent):
        """Cokernel of the first differential, realized on the weight box
        spanned by the F_0 generator degrees plus `extent` steps upward."""
        if pres.length < 1:
            raise OracleError("presentation must have at least one differential")
        f0 = pres.gen_degrees[0]
        f1 = pres.gen_degrees[1]
        d1 = pres.diffs[0]
        lo = tuple(min(g[t] for g in f0) for t in range(3))
        hi = tuple(max(g[t] for g in f0) + extent for t in range(3))
        color = pres.color
        cokers = {}
        for w in itertools.product(*(range(lo[t], hi[t] + 1) for t in range(3))):
            v0 = [i for i, g in enumerate(f0) if all(w[t] >= g[t] for t in range(3))]
            if not v0:
                continue
            v1 = [i for i, g in enumerate(f1) if all(w[t] >= g[t] for t in range(3))]
            columns = []
            for c in v1:
                col = [Fraction(d1[h][c][0]) if d1[h][c] is not None else Fraction(0)
                       for h in v0]
                columns.append(col)
            red, pivots = rref(columns) if columns else ([], [])
            free = [i for i in range(len(v0)) if i not in pivots]
            if free:
                cokers[w] = (v0, red, pivots, free)
        dims = {(w, color): len(free) for w, (v0, red, pivots, free) in cokers.items()}

        def coords(w, vec):
            v0, red, pivots, free = cokers[w]
            for row, p in zip(red, pivots):
                if vec[p] != 0:
                    f = vec[p]
                    vec = [a - f * b for a, b in zip(vec, row)]
            return [vec[i] for i in free]

        actions = {}
        for w, (v0, red, pivots, free) in cokers.items():
            for v in range(3):
                wv = _vadd(w, UNIT_VECTORS[v])
                if wv not in cokers:
                    continue
                tv0 = cokers[wv][0]
                pos = {g: k for k, g in enumerate(tv0)}
                mat = []
                for basis_idx in free:
                    g = v0[basis_idx]
                    vec = [Fraction(0)] * len(tv0)
                    vec[pos[g]] = Fraction(1)
                    mat.append(coords(wv, vec))
                # transpose: rows indexed by target basis
                tgt_dim = len(cokers[wv][3])
                actions[((w, color), v)] = [
                    [mat[c][r] for c in range(len(free))] for r in range(tgt_dim)]
        return cls(dims, actions)

    def generator_keys(self):
        """Keys whose space is not spanned by the images of its
        predecessors."""
        gens = []
        for key in self.dims:
            (w, color) = key
            image_rows = []
            for v in range(3):
                src = (_vsub(w, UNIT_VECTORS[v]), color)
                if src in self.dims:
                    mat = self.action(src, v)
                    if mat is not None:
                        for c in range(self.dims[src]):
                            image_rows.append([mat[r][c]
                                               for r in range(self.dims[key])])
            if rank(image_rows) < self.dims[key]:
                gens.append(key)
        return gens

    def deficiency_region(self, n):
        """Keys that can carry a deficient weight space for colength n:
        within n-1 upward steps of a generator key."""
        frontier = set(self.generator_keys())
        region = set(frontier)
        for _ in range(n - 1):
            nxt = set()
            for (w, color) in frontier:
                for v in range(3):
                    key = (_vadd(w, UNIT_VECTORS[v]), color)
                    if key in self.dims and key not in region:
                        nxt.add(key)
            region |= nxt
            frontier = nxt
        return sorted(region)


# ---------------------------------------------------------------------------
# Linear algebra over F_p


def _rref_p(rows, p):
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _subspaces(m, d, p):
    """All d-dimensional subspaces of F_p^m as rref row bases."""
    if d == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(m), d):
        free_positions = []
        for r, pc in enumerate(pivots):
            for c in range(pc + 1, m):
                if c not in pivots:
                    free_positions.append((r, c))
        for values in itertools.product(range(p), repeat=len(free_positions)):
            rows = [[0] * m for _ in range(d)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), val in zip(free_positions, values):
                rows[r][c] = val
            yield tuple(tuple(r) for r in rows)


def _reduce_p(vec, red, pivots, p):
    v = list(vec)
    for row, pc in zip(red, pivots):
        if v[pc] % p:
            f = v[pc]
            v = [(a - f * b) % p for a, b in zip(v, row)]
    return v


def _subspaces_containing(required_rows, dim_ambient, d, p):
    """All d-dimensional subspaces of F_p^ambient containing the row span of
    required_rows, as rref bases."""
    red, pivots = _rref_p(required_rows, p)
    k = len(red)
    if k > d:
        return
    free_coords = [c for c in range(dim_ambient) if c not in pivots]
    for quot_basis in _subspaces(len(free_coords), d - k, p):
        rows = [list(r) for r in red]
        for qrow in quot_basis:
            lift = [0] * dim_ambient
            for c, val in zip(free_coords, qrow):
                lift[c] = val
            rows.append(lift)
        yield _rref_p(rows, p)


def _to_fp(x, p):
    f = Fraction(x)
    if f.denominator % p == 0:
        raise OracleError(f"prime {p} divides a structure-constant denominator")
    return (f.numerator * pow(f.denominator, -1, p)) % p


# ---------------------------------------------------------------------------
# The oracle


def _count_submodules(gm, region, n, p):
    """Number of homogeneous submodules of colength n over F_p, with all
    deficiency confined to `region` (which is exhaustive by construction)."""
    mats_p = {}

    def mat_p(key, v):
        if (key, v) not in mats_p:
            mat = gm.action(key, v)
            mats_p[(key, v)] = (None if mat is None else
                                [[_to_fp(x, p) for x in row] for row in mat])
        return mats_p[(key, v)]

    region = sorted(region, key=lambda k: (k[0], k[1]))
    dims = [gm.dims[k] for k in region]
    total = 0

    def profiles(i, remaining, acc):
        nonlocal total
        if remaining == 0:
            total += _count_profile(dict(acc))
            return
        if i == len(region):
            return
        profiles(i + 1, remaining, acc)
        for c in range(1, min(dims[i], remaining) + 1):
            acc.append((region[i], c))
            profiles(i + 1, remaining - c, acc)
            acc.pop()

    def _count_profile(codims):
        deficient = sorted(codims, key=lambda k: (k[0], k[1]))
        chosen = {}

        def dfs(idx):
            if idx == len(deficient):
                return 1
            key = deficient[idx]
            (w, color) = key
            dim = gm.dims[key]
            target_dim = dim - codims[key]
            required = []
            for v in range(3):
                src = (_vsub(w, UNIT_VECTORS[v]), color)
                if src not in gm.dims:
                    continue
                mat = mat_p(src, v)
                if mat is None:
                    continue
                if src in chosen:
                    vectors = chosen[src]
                else:
                    vectors = [[int(r == c) for r in range(gm.dims[src])]
                               for c in range(gm.dims[src])]
                for vec in vectors:
                    required.append([sum(mat[r][c] * vec[c]
                                         for c in range(gm.dims[src])) % p
                                     for r in range(dim)])
            count = 0
            for red, pivots in _subspaces_containing(required, dim, target_dim, p):
                chosen[key] = red
                count += dfs(idx + 1)
            chosen.pop(key, None)
            return count

        return dfs(0)

    profiles(0, n, [])
    return total


def _next_prime(n):
    candidate = n + 1
    while True:
        if candidate > 2 and all(candidate % d for d in range(2, int(candidate ** 0.5) + 1)):
            return candidate
        candidate += 1


def _interpolate(points):
    """Lagrange interpolation; returns coefficients lowest-first."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += -xj * b
                new[k + 1] += b
            basis = new
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return coeffs


def _as_graded(source, n):
    if isinstance(source, BoxModule):
        if source.truncation_bound is not None and source.truncation_bound < n:
            raise OracleError("box module truncated below the requested length")
        return GradedModule.from_box_module(source)
    if isinstance(source, MonomialPresentation):
        return GradedModule.from_presentation(source, extent=n + 1)
    if isinstance(source, GradedModule):
        return source
    raise TypeError(f"cannot build a graded module from {type(source)!r}")


def quot_euler_bruteforce(source, n, primes=DEFAULT_PRIMES, n_max=DEFAULT_N_MAX,
                          dim_cap=DEFAULT_DIM_CAP, verify_extra=True):
    """e(Quot(M, n)) by finite-field point counting and interpolation.

    `source` may be a BoxModule (possibly with weight multiplicities), a
    MonomialPresentation (its cokernel is used), or a GradedModule.
    """
    if n < 0:
        raise OracleError("length must be >= 0")
    if n == 0:
        return 1
    if n > n_max:
        raise OracleError(f"length {n} exceeds the oracle cap n_max={n_max}")
    primes = tuple(dict.fromkeys(primes))
    if len(primes) < 3:
        raise OracleError("need at least 3 primes")
    if any(p < 2 or any(p % d == 0 for d in range(2, p)) for p in primes):
        raise OracleError("prime list contains a non-prime")
    gm = _as_graded(source, n)
    region = gm.deficiency_region(n)
    involved = sum(gm.dims[k] for k in region)
    if involved > dim_cap:
        raise OracleError(
            f"total dimension {involved} of involved weight spaces exceeds "
            f"cap {dim_cap}")
    points = [(p, _count_submodules(gm, region, n, p)) for p in primes]
    if any(y < 0 for _, y in points):
        raise OracleError("negative point count")
    coeffs = _interpolate(points)
    if any(c.denominator != 1 for c in coeffs):
        raise OracleError("non-polynomial count: interpolation has "
                          "non-integer coefficients")
    if verify_extra:
        q = _next_prime(max(primes))
        predicted = sum(c * q ** k for k, c in enumerate(coeffs))
        actual = _count_submodules(gm, region, n, q)
        if predicted != actual:
            raise OracleError(
                f"non-polynomial count: interpolant predicts {predicted} at "
                f"p={q} but the count is {actual}")
    return int(sum(coeffs))
