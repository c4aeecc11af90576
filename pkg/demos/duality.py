"""Matlis duality as a bijection on quotients.

For a finite fine-graded module E of length d, negating weights and
reversing the action edges gives the dual E^D, and sending a submodule to
its annihilator gives #Quot(E, n) = #Quot(E^D, d - n).  This script draws
random staircase modules and tabulates both count sequences.
"""

import random
import sys

from boxquot import count_quotients, matlis_dual
from boxquot.modules import Box, BoxModule


def staircase_module(cells):
    """Cyclic module on a downward-closed set of exponent vectors."""
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
    cells = {(0, 0, 0)}
    while len(cells) < size:
        addable = set()
        for m in cells:
            for v in range(3):
                t = tuple(m[k] + (k == v) for k in range(3))
                if t in cells:
                    continue
                preds = [tuple(t[k] - (k == u) for k in range(3))
                         for u in range(3)]
                if all(p in cells for p in preds if min(p) >= 0):
                    addable.add(t)
        cells.add(rng.choice(sorted(addable)))
    return frozenset(cells)


def main(seed=12):
    rng = random.Random(seed)
    for trial in range(4):
        module = staircase_module(random_staircase(rng, rng.randint(3, 6)))
        d = len(module)
        dual = matlis_dual(module)
        forward = [count_quotients(module, n) for n in range(d + 1)]
        backward = [count_quotients(dual, d - n) for n in range(d + 1)]
        print(f"module #{trial} of length {d}")
        print(f"  counts on E   : {forward}")
        print(f"  dual, reversed: {backward}")
        print(f"  agree: {forward == backward}")
        print()


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
