"""JSON module-description format and built-in named fixtures.

A description is a JSON object with "kind" in {"ideal", "curve",
"cokernel", "complex", "direct_sum", "finite_boxes"}.  Monomials are
3-element exponent arrays; matrix entries are {"sign": +-1, "exp": [a,b,c]}
or null.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .modules import (Box, BoxModule, CurveProfile, MonomialIdeal,
                      MonomialPresentation, curve_ideal)

KINDS = ("ideal", "curve", "cokernel", "complex", "direct_sum", "finite_boxes")


class DescriptionError(ValueError):
    pass


@dataclass(frozen=True)
class ModuleDescription:
    kind: str
    payload: object  # the validated in-memory object per kind
    source: dict     # the canonical JSON form

    def to_json(self):
        return self.source


def _parse_exp(v, where):
    if (not isinstance(v, (list, tuple)) or len(v) != 3
            or not all(isinstance(x, int) for x in v)):
        raise DescriptionError(f"{where}: expected a 3-element integer array, got {v!r}")
    return tuple(v)


def _parse_matrix(rows, where):
    if not isinstance(rows, list) or not rows:
        raise DescriptionError(f"{where}: matrix must be a non-empty array of rows")
    parsed = []
    for ri, row in enumerate(rows):
        if not isinstance(row, list):
            raise DescriptionError(f"{where}: row {ri} is not an array")
        prow = []
        for ci, e in enumerate(row):
            if e is None:
                prow.append(None)
                continue
            if not isinstance(e, dict) or "sign" not in e or "exp" not in e:
                raise DescriptionError(
                    f"{where}: entry ({ri},{ci}) must be null or "
                    "{{\"sign\": +-1, \"exp\": [a,b,c]}}")
            if e["sign"] not in (1, -1):
                raise DescriptionError(f"{where}: entry ({ri},{ci}) sign must be +-1")
            exp = _parse_exp(e["exp"], f"{where}: entry ({ri},{ci})")
            if any(x < 0 for x in exp):
                raise DescriptionError(
                    f"{where}: entry ({ri},{ci}) exponent must be non-negative")
            prow.append((e["sign"], exp))
        parsed.append(tuple(prow))
    width = len(parsed[0])
    if any(len(r) != width for r in parsed):
        raise DescriptionError(f"{where}: ragged matrix")
    return tuple(parsed)


def _infer_cokernel_degrees(matrix, where):
    """Generator multidegrees of a 2-term presentation, up to an overall
    twist per connected component (twists are irrelevant for counting)."""
    nrows, ncols = len(matrix), len(matrix[0])
    row_deg = [None] * nrows
    col_deg = [None] * ncols
    for c in range(ncols):
        if col_deg[c] is not None:
            continue
        col_deg[c] = (0, 0, 0)
        stack = [("col", c)]
        while stack:
            side, i = stack.pop()
            if side == "col":
                for r in range(nrows):
                    e = matrix[r][i]
                    if e is None:
                        continue
                    deg = tuple(col_deg[i][t] - e[1][t] for t in range(3))
                    if row_deg[r] is None:
                        row_deg[r] = deg
                        stack.append(("row", r))
                    elif row_deg[r] != deg:
                        raise DescriptionError(
                            f"{where}: matrix is not homogeneous at entry "
                            f"({r},{i})")
            else:
                for c2 in range(ncols):
                    e = matrix[i][c2]
                    if e is None:
                        continue
                    deg = tuple(row_deg[i][t] + e[1][t] for t in range(3))
                    if col_deg[c2] is None:
                        col_deg[c2] = deg
                        stack.append(("col", c2))
                    elif col_deg[c2] != deg:
                        raise DescriptionError(
                            f"{where}: matrix is not homogeneous at entry "
                            f"({i},{c2})")
    for r in range(nrows):
        if row_deg[r] is None:
            row_deg[r] = (0, 0, 0)
    return tuple(row_deg), tuple(col_deg)


def parse_module_description(obj, where="module"):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DescriptionError(f"{where}: expected an object with a \"kind\" field")
    kind = obj["kind"]
    if kind not in KINDS:
        raise DescriptionError(f"{where}: unknown kind {kind!r}; expected one of {KINDS}")

    if kind == "ideal":
        gens = obj.get("generators")
        if not isinstance(gens, list):
            raise DescriptionError(f"{where}: ideal needs a \"generators\" array")
        exps = [_parse_exp(g, f"{where}: generator {i}") for i, g in enumerate(gens)]
        if any(x < 0 for g in exps for x in g):
            raise DescriptionError(f"{where}: generator with negative exponent")
        try:
            ideal = MonomialIdeal(frozenset(exps))
        except ValueError as exc:
            raise DescriptionError(f"{where}: {exc}") from exc
        return ModuleDescription("ideal", ideal,
                                 {"kind": "ideal",
                                  "generators": [list(g) for g in sorted(exps)]})

    if kind == "curve":
        profs = obj.get("profiles")
        if not isinstance(profs, list) or len(profs) != 3:
            raise DescriptionError(
                f"{where}: curve needs a 3-element \"profiles\" array")
        parsed = []
        for k, prof in enumerate(profs):
            if not isinstance(prof, list):
                raise DescriptionError(f"{where}: profile {k} is not an array")
            pts = []
            for pt in prof:
                if (not isinstance(pt, list) or len(pt) != 2
                        or not all(isinstance(x, int) for x in pt)):
                    raise DescriptionError(
                        f"{where}: profile {k} point {pt!r} is not a pair")
                pts.append(tuple(pt))
            parsed.append(tuple(pts))
        try:
            profile = CurveProfile(tuple(parsed))
        except ValueError as exc:
            raise DescriptionError(f"{where}: {exc}") from exc
        return ModuleDescription(
            "curve", profile,
            {"kind": "curve",
             "profiles": [sorted([list(p) for p in prof]) for prof in parsed]})

    if kind == "cokernel":
        matrix = _parse_matrix(obj.get("matrix"), where)
        row_deg, col_deg = _infer_cokernel_degrees(matrix, where)
        try:
            pres = MonomialPresentation((row_deg, col_deg), (matrix,))
        except ValueError as exc:
            raise DescriptionError(f"{where}: {exc}") from exc
        return ModuleDescription(
            "cokernel", pres,
            {"kind": "cokernel",
             "matrix": [[None if e is None else
                         {"sign": e[0], "exp": list(e[1])} for e in row]
                        for row in matrix]})

    if kind == "complex":
        levels = obj.get("levels")
        diffs = obj.get("diffs", [])
        if not isinstance(levels, list) or not levels:
            raise DescriptionError(f"{where}: complex needs a \"levels\" array")
        degs = tuple(tuple(_parse_exp(g, f"{where}: level {i} generator") for g in lev)
                     for i, lev in enumerate(levels))
        mats = tuple(_parse_matrix(m, f"{where}: differential {i}")
                     for i, m in enumerate(diffs))
        try:
            pres = MonomialPresentation(degs, mats)
        except ValueError as exc:
            raise DescriptionError(f"{where}: {exc}") from exc
        return ModuleDescription(
            "complex", pres,
            {"kind": "complex",
             "levels": [[list(g) for g in lev] for lev in degs],
             "diffs": [[[None if e is None else
                         {"sign": e[0], "exp": list(e[1])} for e in row]
                        for row in m] for m in mats]})

    if kind == "direct_sum":
        summands = obj.get("summands")
        if not isinstance(summands, list) or not summands:
            raise DescriptionError(f"{where}: direct_sum needs a \"summands\" array")
        parsed = [parse_module_description(s, f"{where}: summand {i}")
                  for i, s in enumerate(summands)]
        return ModuleDescription(
            "direct_sum", tuple(parsed),
            {"kind": "direct_sum", "summands": [d.source for d in parsed]})

    # finite_boxes
    boxes = obj.get("boxes")
    edges = obj.get("edges", [[], [], []])
    if not isinstance(boxes, list):
        raise DescriptionError(f"{where}: finite_boxes needs a \"boxes\" array")
    parsed_boxes = []
    for i, b in enumerate(boxes):
        if not isinstance(b, dict) or "weight" not in b:
            raise DescriptionError(f"{where}: box {i} needs a \"weight\"")
        parsed_boxes.append(Box(_parse_exp(b["weight"], f"{where}: box {i}"),
                                int(b.get("color", 0)), int(b.get("slot", 0))))
    if not isinstance(edges, list) or len(edges) != 3:
        raise DescriptionError(f"{where}: edges must be a 3-element array")
    parsed_edges = []
    for v, es in enumerate(edges):
        pairs = set()
        for e in es:
            if not isinstance(e, list) or len(e) != 2:
                raise DescriptionError(f"{where}: edge {e!r} in variable {v}")
            pairs.add((int(e[0]), int(e[1])))
        parsed_edges.append(frozenset(pairs))
    try:
        module = BoxModule(tuple(parsed_boxes), tuple(parsed_edges))
        module.check_commutativity()
    except ValueError as exc:
        raise DescriptionError(f"{where}: {exc}") from exc
    return ModuleDescription(
        "finite_boxes", module,
        {"kind": "finite_boxes",
         "boxes": [{"weight": list(b.weight), "color": b.color, "slot": b.slot}
                   for b in parsed_boxes],
         "edges": [sorted([list(e) for e in es]) for es in parsed_edges]})


def parse_module_file(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DescriptionError(f"{path}: malformed JSON: {exc}") from exc
    return parse_module_description(obj, where=str(path))


# ---------------------------------------------------------------------------
# Built-in fixtures


def _coker_xyz():
    return {"kind": "cokernel",
            "matrix": [[{"sign": 1, "exp": [1, 0, 0]}],
                       [{"sign": 1, "exp": [0, 1, 0]}],
                       [{"sign": 1, "exp": [0, 0, 1]}]]}


FIXTURES = {
    "line": {"kind": "curve", "profiles": [[[0, 0]], [], []]},
    "two-axes": {"kind": "curve", "profiles": [[[0, 0]], [[0, 0]], []]},
    "fat-line": {"kind": "curve", "profiles": [[[0, 0], [1, 0]], [], []]},
    "rank2-R": _coker_xyz(),
    "free-r2": {"kind": "direct_sum",
                "summands": [{"kind": "ideal", "generators": [[0, 0, 0]]},
                             {"kind": "ideal", "generators": [[0, 0, 0]]}]},
}


def fixture(name):
    if name not in FIXTURES:
        raise DescriptionError(
            f"unknown fixture {name!r}; available: {sorted(FIXTURES)}")
    return parse_module_description(FIXTURES[name], where=f"fixture {name}")


def curve_ideal_of(description):
    if description.kind == "curve":
        return curve_ideal(description.payload)
    if description.kind == "ideal":
        return description.payload
    raise DescriptionError(
        f"expected a curve or ideal description, got kind {description.kind!r}")
