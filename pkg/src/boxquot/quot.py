"""Torus-fixed points of Quot(M, n) for multiplicity-free box modules.

A fixed quotient of length n corresponds to an order ideal of size n in the
edge DAG of M (the quotient's support; its complement is the edge-closed
kernel).  Enumeration is a DFS over boxes in canonical weight-lexicographic
order; counting memoizes on the part of the decision prefix that can still
influence the future.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .modules import MonomialIdeal, box_module_of_ideal, direct_sum
from .series import TruncSeries


@dataclass(frozen=True)
class QuotFixedPoint:
    """The support of a fixed quotient: a downward-closed set of box
    indices."""

    support: frozenset

    def __len__(self):
        return len(self.support)


def _canonical_order(module):
    """Topological order of box indices: weight-lex, then color, then slot.
    Weights strictly increase along edges, so lex order is topological."""
    return sorted(range(len(module.boxes)),
                  key=lambda i: (module.boxes[i].weight,
                                 module.boxes[i].color,
                                 module.boxes[i].slot))


def _check_enumerable(module, n):
    if not module.is_multiplicity_free():
        raise ValueError(
            "module is not multiplicity-free: fixed points are not isolated; "
            "use the small-n brute-force oracle instead")
    if module.truncation_bound is not None and n > module.truncation_bound:
        raise ValueError(
            f"truncation bound {module.truncation_bound} is below the "
            f"requested length {n}")


def enumerate_quotients(module, n):
    """All order ideals of size n in M's edge DAG, in canonical order."""
    _check_enumerable(module, n)
    order = _canonical_order(module)
    pos = {b: k for k, b in enumerate(order)}
    preds = module.predecessors()
    pred_pos = [sorted(pos[p] for p in preds[order[k]]) for k in range(len(order))]
    result = []
    total = len(order)

    def dfs(k, chosen):
        if len(chosen) == n:
            result.append(QuotFixedPoint(frozenset(order[i] for i in chosen)))
            return
        if k == total or len(chosen) + (total - k) < n:
            return
        if all(p in chosen for p in pred_pos[k]):
            chosen.add(k)
            dfs(k + 1, chosen)
            chosen.discard(k)
        dfs(k + 1, chosen)

    dfs(0, set())
    return result


def count_quotients(module, n):
    """Number of order ideals of size n (= e(Quot(M, n)) by localization)."""
    _check_enumerable(module, n)
    if n == 0:
        return 1
    order = _canonical_order(module)
    pos = {b: k for k, b in enumerate(order)}
    preds = module.predecessors()
    pred_pos = [frozenset(pos[p] for p in preds[order[k]])
                for k in range(len(order))]
    total = len(order)
    # indices < k that some element >= k still depends on
    relevant = [frozenset()] * (total + 1)
    acc = set()
    for k in range(total - 1, -1, -1):
        acc |= pred_pos[k]
        acc.discard(k)
        relevant[k] = frozenset(p for p in acc if p < k)
    memo = {}

    def count(k, need, chosen):
        if need == 0:
            return 1
        if k == total or need > total - k:
            return 0
        key = (k, need, chosen & relevant[k])
        if key in memo:
            return memo[key]
        result = count(k + 1, need, chosen)
        if pred_pos[k] <= chosen:
            result += count(k + 1, need - 1, chosen | {k})
        memo[key] = result
        return result

    return count(0, n, frozenset())


def quot_series(module, order, workers=1):
    """Sum_{n=0..order} #fixed-points(M, n) q^n, exact."""
    if module.truncation_bound is not None and order > module.truncation_bound:
        raise ValueError(
            f"truncation bound {module.truncation_bound} is below the "
            f"requested order {order}")
    ns = range(order + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(lambda n: count_quotients(module, n), ns))
    else:
        counts = [count_quotients(module, n) for n in ns]
    return TruncSeries.from_coeffs(counts, order=order)


def box_model_of_ring(bound):
    """Box model of A itself (the unit ideal), good for lengths <= bound."""
    return box_module_of_ideal(MonomialIdeal(frozenset({(0, 0, 0)})), bound)


def colored_quot_series(rank, order, workers=1):
    """Quot series of the r-colored direct sum of box models of A; equals
    the MacMahon series raised to the r-th power."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if order == 0:
        return TruncSeries.one(0)
    summands = [box_model_of_ring(order) for _ in range(rank)]
    return quot_series(direct_sum(summands), order, workers=workers)
