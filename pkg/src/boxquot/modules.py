"""Monomial ideals, free presentations, and fine-graded box modules over
C[x,y,z].

A BoxModule records a torus-decomposed module as a set of boxes (weight,
color, slot) together with the support of the three variable actions.  Edge
scalars are deliberately not stored: for multiplicity-free modules the
homogeneous submodule structure depends only on edge support.

All multidegree twists are dropped throughout; only the edge poset matters
for counting quotients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Subquotient, kernel_basis

UNIT_VECTORS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _vadd(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _vsub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _divides(a, b):
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def _lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


# ---------------------------------------------------------------------------
# Monomial ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set (an antichain
    under divisibility).  The empty set is the zero ideal; the single
    generator (0,0,0) is the unit ideal."""

    generators: frozenset
    cm_warning: bool = field(default=False, compare=False)

    def __post_init__(self):
        gens = frozenset(tuple(g) for g in self.generators)
        for g in gens:
            if len(g) != 3 or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
        for a, b in itertools.permutations(gens, 2):
            if _divides(a, b):
                raise ValueError("generators are not an antichain under divisibility")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_monomials(cls, monomials):
        """Build from a (possibly redundant) generating set."""
        mons = [tuple(m) for m in monomials]
        minimal = [m for m in mons
                   if not any(_divides(o, m) and o != m for o in mons)]
        return cls(frozenset(minimal))

    def contains(self, m):
        return any(_divides(g, m) for g in self.generators)

    @property
    def is_zero(self):
        return not self.generators

    @property
    def is_unit(self):
        return (0, 0, 0) in self.generators

    def max_exponents(self):
        if not self.generators:
            return (0, 0, 0)
        return tuple(max(g[i] for g in self.generators) for i in range(3))


def _saturated_in(ideal, m, axis):
    """True when m * x_axis^k stays outside the ideal for all k."""
    others = [i for i in range(3) if i != axis]
    return not any(all(g[i] <= m[i] for i in others) for g in ideal.generators)


def curve_dimension_leq_one(ideal):
    """No standard monomial spans a 2-dimensional cone of standard
    monomials."""
    if ideal.is_zero:
        return False
    mx = ideal.max_exponents()
    for w in range(3):
        # a 2-dim cone transverse to axis w exists iff some standard monomial
        # t*e_w has no generator with g_w <= t
        for t in range(mx[w] + 1):
            m = tuple(t if i == w else 0 for i in range(3))
            if ideal.contains(m):
                break
            if not any(g[w] <= t for g in ideal.generators):
                return False
    return True


def is_cm_curve(ideal):
    """Check that A/I is a non-empty Cohen-Macaulay curve: dimension exactly
    one and no finite-length submodule (every standard monomial escapes to
    infinity along at least one axis).

    Standard monomials with a coordinate above all generators are
    automatically saturated along that axis, so a finite box suffices.
    """
    if ideal.is_zero or ideal.is_unit:
        return False
    if not curve_dimension_leq_one(ideal):
        return False
    mx = ideal.max_exponents()
    has_curve_point = False
    for m in itertools.product(*(range(mx[i] + 1) for i in range(3))):
        if ideal.contains(m):
            continue
        sat = [axis for axis in range(3) if _saturated_in(ideal, m, axis)]
        if not sat:
            return False
        has_curve_point = True
    return has_curve_point


# ---------------------------------------------------------------------------
# Curve profiles


@dataclass(frozen=True)
class CurveProfile:
    """Cross-section partitions of a monomial curve: profiles[k] is a finite
    downward-closed subset of Z>=0^2 in the plane of the two variables other
    than x_k."""

    profiles: tuple

    def __post_init__(self):
        profs = tuple(frozenset(tuple(p) for p in prof) for prof in self.profiles)
        if len(profs) != 3:
            raise ValueError("need exactly three cross-section partitions")
        for prof in profs:
            for (a, b) in prof:
                if a < 0 or b < 0:
                    raise ValueError("cross-section point with negative coordinate")
                for (c, d) in ((a - 1, b), (a, b - 1)):
                    if c >= 0 and d >= 0 and (c, d) not in prof:
                        raise ValueError("cross-section is not downward closed")
        if all(not prof for prof in profs):
            raise ValueError("all cross-sections empty: not a curve")
        object.__setattr__(self, "profiles", profs)

    def standard(self, m):
        """Is the monomial m outside the curve ideal, i.e. on one of the
        thickened axes?"""
        a, b, c = m
        return ((b, c) in self.profiles[0]
                or (a, c) in self.profiles[1]
                or (a, b) in self.profiles[2])


def curve_ideal(profile):
    """Monomial ideal of the union of thickened coordinate axes with the
    given cross-sections, with minimal generators."""
    ext = [0, 0, 0]
    # axis k's cylinder constrains the other two coordinates of generators
    for k, prof in enumerate(profile.profiles):
        i, j = [t for t in range(3) if t != k]
        for (a, b) in prof:
            ext[i] = max(ext[i], a + 1)
            ext[j] = max(ext[j], b + 1)
    bound = [e + 1 for e in ext]
    gens = []
    for m in itertools.product(*(range(b + 1) for b in bound)):
        if profile.standard(m):
            continue
        minimal = True
        for v in range(3):
            if m[v] > 0:
                below = tuple(m[t] - (t == v) for t in range(3))
                if not profile.standard(below):
                    minimal = False
                    break
        if minimal:
            gens.append(m)
    ideal = MonomialIdeal.from_monomials(gens)
    if not is_cm_curve(ideal):
        ideal = MonomialIdeal(ideal.generators, cm_warning=True)
    return ideal


# ---------------------------------------------------------------------------
# Free presentations with signed-monomial differentials


@dataclass(frozen=True)
class MonomialPresentation:
    """A complex F_k -> ... -> F_1 -> F_0 of free modules.

    gen_degrees[i] lists the multidegrees of the generators of F_i (entries
    in Z^3).  diffs[i] is the matrix of F_{i+1} -> F_i: diffs[i][row][col]
    is (sign, exp) with sign in {1,-1} and exp in Z>=0^3, or None.  The
    module presented is coker(F_1 -> F_0).
    """

    gen_degrees: tuple
    diffs: tuple
    color: int = 0

    def __post_init__(self):
        degs = tuple(tuple(tuple(d) for d in level) for level in self.gen_degrees)
        diffs = tuple(
            tuple(tuple(e if e is None else (e[0], tuple(e[1])) for e in row)
                  for row in mat)
            for mat in self.diffs)
        object.__setattr__(self, "gen_degrees", degs)
        object.__setattr__(self, "diffs", diffs)
        if len(diffs) != max(len(degs) - 1, 0):
            raise ValueError("number of differentials does not match levels")
        for i, mat in enumerate(diffs):
            rows, cols = degs[i], degs[i + 1]
            if len(mat) != len(rows) or any(len(r) != len(cols) for r in mat):
                raise ValueError(f"differential {i} has wrong shape")
            for ri, row in enumerate(mat):
                for ci, e in enumerate(row):
                    if e is None:
                        continue
                    sign, exp = e
                    if sign not in (1, -1):
                        raise ValueError("matrix coefficients must be +-1")
                    if any(x < 0 for x in exp):
                        raise ValueError("matrix entry with negative exponent")
                    if _vsub(cols[ci], rows[ri]) != exp:
                        raise ValueError(
                            f"entry ({ri},{ci}) of differential {i} is not "
                            "homogeneous for the generator multidegrees")
        self._check_d_squared()

    @property
    def length(self):
        return len(self.gen_degrees) - 1

    def _check_d_squared(self):
        for i in range(len(self.diffs) - 1):
            a, b = self.diffs[i], self.diffs[i + 1]
            nrows, nmid, ncols = len(self.gen_degrees[i]), len(a[0]) if a else 0, \
                len(self.gen_degrees[i + 2])
            for r in range(nrows):
                for c in range(ncols):
                    acc = {}
                    for m in range(nmid):
                        e1, e2 = a[r][m], b[m][c]
                        if e1 is None or e2 is None:
                            continue
                        exp = _vadd(e1[1], e2[1])
                        acc[exp] = acc.get(exp, 0) + e1[0] * e2[0]
                    if any(v != 0 for v in acc.values()):
                        raise ValueError(
                            f"d^2 != 0 at entry ({r},{c}) between levels "
                            f"{i} and {i + 2}")

    def rank(self):
        """Generic rank of the presented module (alternating sum)."""
        return sum((-1) ** i * len(level) for i, level in enumerate(self.gen_degrees))


def _taylor_complex(generators):
    gens = sorted(generators)
    s = len(gens)
    levels = []
    index = []
    for size in range(0, s + 1):
        subsets = list(itertools.combinations(range(s), size))
        index.append({sub: k for k, sub in enumerate(subsets)})
        if size == 0:
            levels.append([(0, 0, 0)])
        else:
            degs = []
            for sub in subsets:
                l = gens[sub[0]]
                for j in sub[1:]:
                    l = _lcm(l, gens[j])
                degs.append(l)
            levels.append(degs)
    diffs = []
    for size in range(1, s + 1):
        rows = list(index[size - 1])
        cols = list(index[size])
        mat = [[None] * len(cols) for _ in rows]
        for ci, sub in enumerate(cols):
            col_deg = levels[size][index[size][sub]]
            for pos, j in enumerate(sub):
                rest = tuple(t for t in sub if t != j)
                ri = index[size - 1][rest]
                row_deg = levels[size - 1][ri]
                mat[ri][ci] = ((-1) ** pos, _vsub(col_deg, row_deg))
        diffs.append(tuple(tuple(row) for row in mat))
    return MonomialPresentation(tuple(levels), tuple(diffs))


def resolve_ideal(ideal):
    """The Taylor complex of the generator set: a free resolution of A/I."""
    if ideal.is_zero:
        raise ValueError("cannot resolve the zero quotient's ideal")
    return _taylor_complex(ideal.generators)


def ideal_presentation(ideal):
    """A free resolution of the ideal itself (the Taylor complex of A/I
    shifted by one)."""
    taylor = resolve_ideal(ideal)
    return MonomialPresentation(taylor.gen_degrees[1:], taylor.diffs[1:])


# ---------------------------------------------------------------------------
# Box modules


@dataclass(frozen=True)
class Box:
    weight: tuple
    color: int = 0
    slot: int = 0


@dataclass(frozen=True)
class BoxModule:
    """A fine-graded module as a DAG of boxes; edges[v] holds index pairs
    (i, j) meaning x_v maps box i onto box j (weight(j) = weight(i) + e_v).

    truncation_bound is None when the box set is the whole (finite) module;
    otherwise boxes are complete exactly for quotients of length up to the
    bound."""

    boxes: tuple
    edges: tuple  # three frozensets of (i, j)
    truncation_bound: object = None

    def __post_init__(self):
        boxes = tuple(self.boxes)
        edges = tuple(frozenset(e) for e in self.edges)
        if len(edges) != 3:
            raise ValueError("need edge sets for the three variables")
        for v in range(3):
            for (i, j) in edges[v]:
                if _vsub(boxes[j].weight, boxes[i].weight) != UNIT_VECTORS[v]:
                    raise ValueError(
                        f"edge ({i},{j}) in variable {v} has wrong weight step")
        object.__setattr__(self, "boxes", boxes)
        object.__setattr__(self, "edges", edges)

    def __len__(self):
        return len(self.boxes)

    @property
    def is_finite(self):
        return self.truncation_bound is None

    def is_multiplicity_free(self):
        seen = set()
        for b in self.boxes:
            key = (b.weight, b.color)
            if key in seen:
                return False
            seen.add(key)
        return True

    def successors(self):
        succ = {i: [] for i in range(len(self.boxes))}
        for v in range(3):
            for (i, j) in self.edges[v]:
                succ[i].append(j)
        return succ

    def predecessors(self):
        pred = {i: [] for i in range(len(self.boxes))}
        for v in range(3):
            for (i, j) in self.edges[v]:
                pred[j].append(i)
        return pred

    def down_set_sizes(self):
        """Size of the reverse-reachable set of each box."""
        pred = self.predecessors()
        sizes = {}
        for i in range(len(self.boxes)):
            seen = set()
            stack = [i]
            while stack:
                b = stack.pop()
                if b in seen:
                    continue
                seen.add(b)
                stack.extend(pred[b])
            sizes[i] = len(seen)
        return sizes

    def check_commutativity(self):
        """For every box and pair of variables, the two edge paths (when both
        present) must land on the same box."""
        targets = {}
        for v in range(3):
            for (i, j) in self.edges[v]:
                targets.setdefault((i, v), set()).add(j)
        for i in range(len(self.boxes)):
            for u in range(3):
                for v in range(u + 1, 3):
                    via_u = {t for a in targets.get((i, u), ())
                             for t in targets.get((a, v), ())}
                    via_v = {t for a in targets.get((i, v), ())
                             for t in targets.get((a, u), ())}
                    if via_u and via_v and not (via_u & via_v):
                        raise ValueError(
                            f"commutativity fails at box {i} for variables "
                            f"{u},{v}")
        return True


ZERO_MODULE = BoxModule((), (frozenset(), frozenset(), frozenset()))


def matlis_dual(module):
    """Negate weights and reverse edges, keeping variable labels."""
    if not module.is_finite:
        raise ValueError("Matlis dual requires a genuinely finite module, "
                         "not a truncation")
    boxes = tuple(Box(tuple(-w for w in b.weight), b.color, b.slot)
                  for b in module.boxes)
    edges = tuple(frozenset((j, i) for (i, j) in module.edges[v])
                  for v in range(3))
    return BoxModule(boxes, edges)


def direct_sum(modules):
    """Disjoint union of boxes with fresh distinct colors per summand."""
    boxes = []
    edges = [set(), set(), set()]
    bound = None
    color_offset = 0
    for m in modules:
        offset = len(boxes)
        colors = {b.color for b in m.boxes} or {0}
        remap = {c: color_offset + k for k, c in enumerate(sorted(colors))}
        color_offset += len(colors)
        for b in m.boxes:
            boxes.append(Box(b.weight, remap[b.color], b.slot))
        for v in range(3):
            for (i, j) in m.edges[v]:
                edges[v].add((i + offset, j + offset))
        if m.truncation_bound is not None:
            bound = m.truncation_bound if bound is None else min(bound, m.truncation_bound)
    return BoxModule(tuple(boxes), tuple(frozenset(e) for e in edges), bound)


def box_module_of_ideal(ideal, bound):
    """Boxes are the monomials of I whose down-set inside I has size at most
    `bound`; this is complete for enumerating quotients of length <= bound."""
    if bound < 1:
        raise ValueError("down-set bound must be >= 1")
    if ideal.is_zero:
        return ZERO_MODULE

    def down_set_size(m):
        count = 0
        for d in itertools.product(*(range(e + 1) for e in m)):
            if ideal.contains(d):
                count += 1
                if count > bound:
                    return count
        return count

    kept = {}
    queue = sorted(ideal.generators)
    while queue:
        m = queue.pop()
        if m in kept:
            continue
        ds = down_set_size(m)
        if ds > bound:
            continue
        kept[m] = ds
        for v in range(3):
            queue.append(_vadd(m, UNIT_VECTORS[v]))
    mons = sorted(kept)
    index = {m: i for i, m in enumerate(mons)}
    edges = [set(), set(), set()]
    for m in mons:
        for v in range(3):
            t = _vadd(m, UNIT_VECTORS[v])
            if t in index:
                edges[v].add((index[m], index[t]))
    boxes = tuple(Box(m) for m in mons)
    return BoxModule(boxes, tuple(frozenset(e) for e in edges), bound)


# ---------------------------------------------------------------------------
# Ext^1 via per-degree linear algebra on the dualized complex


def _hom_valid(gens, w):
    """Indices of generators g with w + deg(g) >= 0 (support of Hom(F,A)_w)."""
    return [i for i, g in enumerate(gens) if all(w[t] + g[t] >= 0 for t in range(3))]


def _dual_matrix(pres, i, w, valid_lo, valid_hi):
    """Matrix of Hom(F_{i-1},A)_w -> Hom(F_i,A)_w in the valid-generator
    bases: rows indexed by valid F_i gens, columns by valid F_{i-1} gens."""
    d = pres.diffs[i - 1]  # F_i -> F_{i-1}
    mat = []
    for g in valid_hi:
        row = []
        for h in valid_lo:
            e = d[h][g]
            row.append(Fraction(e[0]) if e is not None else Fraction(0))
        mat.append(row)
    return mat


def _check_primal_exactness(pres):
    """Verify the complex is a resolution of its cokernel: homology vanishes
    in positions >= 1.  Syzygies of monomial matrices live in degrees bounded
    by pairwise lcms of generator degrees, so a finite box suffices."""
    if pres.length < 1:
        return
    all_degs = [g for level in pres.gen_degrees for g in level]
    lo = tuple(min(g[t] for g in all_degs) for t in range(3))
    hi = tuple(max(g[t] for g in all_degs) for t in range(3))
    span = tuple(hi[t] - lo[t] for t in range(3))
    top = tuple(hi[t] + span[t] + 2 for t in range(3))
    for w in itertools.product(*(range(lo[t], top[t] + 1) for t in range(3))):
        valid = [[i for i, g in enumerate(level)
                  if all(w[t] >= g[t] for t in range(3))]
                 for level in pres.gen_degrees]
        for pos in range(1, pres.length + 1):
            if not valid[pos]:
                continue
            # d_pos at weight w: rows F_{pos-1}, cols F_pos
            d = pres.diffs[pos - 1]
            mat = [[Fraction(d[h][g][0]) if d[h][g] is not None else Fraction(0)
                    for g in valid[pos]] for h in valid[pos - 1]]
            cycles = kernel_basis(mat, len(valid[pos]))
            if pos + 1 <= pres.length:
                d2 = pres.diffs[pos]
                # boundary vectors: images of valid F_{pos+1} gens
                boundaries = [[Fraction(d2[h][g][0]) if d2[h][g] is not None
                               else Fraction(0) for h in valid[pos]]
                              for g in valid[pos + 1]]
            else:
                boundaries = []
            hq = Subquotient(cycles, boundaries, len(valid[pos]))
            if hq.dim:
                raise ValueError(
                    f"complex is not a resolution: homology at position "
                    f"{pos}, weight {w}")


def ext1(pres, bound=8, check_resolution=True):
    """Ext^1 of the presented module into A, as a BoxModule.

    Computed degree by degree by exact rational linear algebra on the
    dualized complex, inside a weight box large enough for all boxes with
    down-set size <= bound.  Raises when the dual complex has homology in
    positions > 1 ("hd exceeds 1").
    """
    if bound < 1:
        raise ValueError("down-set bound must be >= 1")
    if pres.length < 1:
        return ZERO_MODULE
    if check_resolution:
        _check_primal_exactness(pres)

    dual_degs = [g for level in pres.gen_degrees[1:] for g in level]
    lo = tuple(-max(g[t] for g in dual_degs) for t in range(3))
    hi_margin = tuple(-min(g[t] for g in dual_degs) for t in range(3))
    hi = tuple(hi_margin[t] + bound + 1 for t in range(3))

    homology = {}
    ambients = {}
    for w in itertools.product(*(range(lo[t], hi[t] + 1) for t in range(3))):
        valid = [_hom_valid(level, w) for level in pres.gen_degrees]
        if all(not valid[i] for i in range(1, pres.length + 1)):
            continue
        if valid[1]:
            out = (_dual_matrix(pres, 2, w, valid[1], valid[2])
                   if pres.length >= 2 else [])
            cycles = kernel_basis(out, len(valid[1]))
            into = _dual_matrix(pres, 1, w, valid[0], valid[1])
            boundaries = [[into[r][c] for r in range(len(valid[1]))]
                          for c in range(len(valid[0]))]
            hq = Subquotient(cycles, boundaries, len(valid[1]))
            if hq.dim:
                homology[w] = hq
                ambients[w] = valid[1]
        # positions > 1 of the dual complex must be exact
        for pos in range(2, pres.length + 1):
            if not valid[pos]:
                continue
            out2 = (_dual_matrix(pres, pos + 1, w, valid[pos], valid[pos + 1])
                    if pos + 1 <= pres.length else [])
            cyc = kernel_basis(out2, len(valid[pos]))
            into2 = _dual_matrix(pres, pos, w, valid[pos - 1], valid[pos])
            bnd = [[into2[r][c] for r in range(len(valid[pos]))]
                   for c in range(len(valid[pos - 1]))]
            if Subquotient(cyc, bnd, len(valid[pos])).dim:
                raise ValueError("hd exceeds 1: Ext^{>1} is nonzero at "
                                 f"weight {w}")

    if not homology:
        return ZERO_MODULE

    boxes = []
    box_index = {}
    for w in sorted(homology):
        for slot in range(homology[w].dim):
            box_index[(w, slot)] = len(boxes)
            boxes.append(Box(w, pres.color, slot))

    edges = [set(), set(), set()]
    for w, hq in homology.items():
        amb = ambients[w]
        for v in range(3):
            wv = _vadd(w, UNIT_VECTORS[v])
            if wv not in homology:
                continue
            amb2 = ambients[wv]
            hq2 = homology[wv]
            pos = {g: k for k, g in enumerate(amb2)}
            for slot in range(hq.dim):
                vec = [Fraction(0)] * len(amb2)
                for k, g in enumerate(amb):
                    vec[pos[g]] = hq.basis[slot][k]
                coords = hq2.coordinates(vec)
                for slot2, c in enumerate(coords):
                    if c != 0:
                        edges[v].add((box_index[(w, slot)],
                                      box_index[(wv, slot2)]))

    module = BoxModule(tuple(boxes), tuple(frozenset(e) for e in edges))
    # finite iff nothing reaches the outer shell of the scan box
    on_shell = any(any(b.weight[t] >= hi[t] - 1 for t in range(3))
                   for b in module.boxes)
    if not on_shell:
        return module
    sizes = module.down_set_sizes()
    keep = sorted(i for i, s in sizes.items() if s <= bound)
    remap = {i: k for k, i in enumerate(keep)}
    kept_boxes = tuple(module.boxes[i] for i in keep)
    kept_edges = tuple(frozenset((remap[i], remap[j]) for (i, j) in module.edges[v]
                                 if i in remap and j in remap)
                       for v in range(3))
    return BoxModule(kept_boxes, kept_edges, bound)
