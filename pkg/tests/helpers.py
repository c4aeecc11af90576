"""Shared helpers for the test suite: canonical forms of box modules up to
translation, and random staircase modules for property tests."""

import itertools

from boxquot.modules import Box, BoxModule, UNIT_VECTORS


def canonical_form(module):
    """Translation-invariant fingerprint of a box module: weights shifted so
    the componentwise minimum is zero, plus edges as weight pairs."""
    if not module.boxes:
        return ((), ((), (), ()), module.truncation_bound)
    lo = tuple(min(b.weight[t] for b in module.boxes) for t in range(3))
    shift = lambda w: tuple(w[t] - lo[t] for t in range(3))
    boxes = tuple(sorted((shift(b.weight), b.color) for b in module.boxes))
    edges = tuple(
        tuple(sorted((shift(module.boxes[i].weight), shift(module.boxes[j].weight))
                     for (i, j) in module.edges[v]))
        for v in range(3))
    return (boxes, edges, module.truncation_bound)


def staircase_module(cells):
    """Box module on a downward-closed set of exponent vectors, with every
    possible edge present (a cyclic quotient A/I)."""
    mons = sorted(cells)
    index = {m: i for i, m in enumerate(mons)}
    edges = [set(), set(), set()]
    for m in mons:
        for v in range(3):
            t = tuple(m[k] + (k == v) for k in range(3))
            if t in index:
                edges[v].add((index[m], index[t]))
    return BoxModule(tuple(Box(m) for m in mons),
                     tuple(frozenset(e) for e in edges))


def random_staircase(rng, size):
    """A random downward-closed subset of Z>=0^3 of the given size."""
    cells = {(0, 0, 0)}
    while len(cells) < size:
        addable = set()
        for m in cells:
            for v in range(3):
                t = tuple(m[k] + (k == v) for k in range(3))
                if t in cells:
                    continue
                preds = [tuple(t[k] - (k == u) for k in range(3)) for u in range(3)]
                if all(p in cells for p in preds if min(p) >= 0):
                    addable.add(t)
        cells.add(rng.choice(sorted(addable)))
    return frozenset(cells)


def box_of(ideal, bound):
    """All monomials in a box, split by membership (independent membership
    oracle for curve ideals)."""
    inside, outside = [], []
    for m in itertools.product(range(bound + 1), repeat=3):
        (inside if ideal.contains(m) else outside).append(m)
    return inside, outside
