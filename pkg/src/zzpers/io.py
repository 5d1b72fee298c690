"""JSON file formats.

Module file::

    {"field": 2, "type": "gf", "dims": [1, 2, 1],
     "maps": [{"dir": "g", "matrix": [[1, 0]]}, {"dir": "f", "matrix": [[0, 1]]}]}

Barcode file::

    {"grid": ["1", "2", "3"],
     "entries": [{"birth": "1", "death": "2", "multiplicity": 1, "dim": null}]}

Complex-sequence file::

    {"field": 2, "vertices": 4, "mode": "union", "dims": [0, 1],
     "complexes": [[[0, 1], [1, 2]], [[2, 3], [0, 3]]]}

Diamond file::

    {"k": 2, "upper": <module>, "lower": <module>}

The ``*_to_json`` emitters produce one canonical text per value, so
``emit(parse(text)) == text`` for any emitted ``text``.
"""

from __future__ import annotations

import json
import logging

from .homology import SimplicialComplex
from .zigzag import Barcode, ZigzagModule

log = logging.getLogger(__name__)


class FormatError(ValueError):
    """Malformed input file."""


def _require(obj: dict, key: str, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing field {key!r}")
    val = obj[key]
    if kind is int and isinstance(val, bool) or not isinstance(val, kind):
        raise FormatError(f"field {key!r} has the wrong type")
    return val


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def module_from_obj(obj: dict) -> ZigzagModule:
    p = _require(obj, "field", int)
    tau = _require(obj, "type", str)
    dims = _require(obj, "dims", list)
    maps = _require(obj, "maps", list)
    if len(maps) != len(tau):
        raise FormatError(f"type {tau!r} has {len(tau)} arrows but {len(maps)} maps are given")
    mats = []
    for i, (entry, arrow) in enumerate(zip(maps, tau), start=1):
        if _require(entry, "dir", str) != arrow:
            raise FormatError(f"map {i} has dir {entry['dir']!r} but the type says {arrow!r}")
        mats.append(_require(entry, "matrix", list))
    try:
        return ZigzagModule.from_lists(p, tau, dims, mats)
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from None


def module_from_json(text: str) -> ZigzagModule:
    return module_from_obj(_load(text))


def _matrix_list(m) -> list:
    return [[int(x) for x in row] for row in m]


def module_to_obj(m: ZigzagModule) -> dict:
    return {
        "field": m.p,
        "type": m.tau,
        "dims": list(m.dims),
        "maps": [{"dir": a, "matrix": _matrix_list(mat)} for a, mat in zip(m.tau, m.maps)],
    }


def module_to_json(m: ZigzagModule) -> str:
    obj = module_to_obj(m)
    lines = [
        "{",
        f'  "field": {obj["field"]},',
        f'  "type": {json.dumps(obj["type"])},',
        f'  "dims": {json.dumps(obj["dims"])},',
    ]
    if obj["maps"]:
        lines.append('  "maps": [')
        body = [f"    {json.dumps(e)}" for e in obj["maps"]]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "maps": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def default_grid(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def barcode_to_obj(bc: Barcode, n: int | None = None) -> dict:
    grid = bc.grid
    if grid is None:
        top = max((d for _, d, _, _ in bc.entries()), default=0)
        grid = default_grid(max(top, n or 0))
    return {
        "grid": list(grid),
        "entries": [
            {"birth": grid[b - 1], "death": grid[d - 1], "multiplicity": c, "dim": dm}
            for b, d, c, dm in bc.entries()
        ],
    }


def barcode_to_json(bc: Barcode, n: int | None = None, extra: dict | None = None) -> str:
    obj = barcode_to_obj(bc, n)
    lines = ["{", f'  "grid": {json.dumps(obj["grid"])},']
    if extra:
        for key in sorted(extra):
            lines.append(f"  {json.dumps(key)}: {json.dumps(extra[key])},")
    if obj["entries"]:
        lines.append('  "entries": [')
        lines.append(",\n".join(f"    {json.dumps(e)}" for e in obj["entries"]))
        lines.append("  ]")
    else:
        lines.append('  "entries": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def barcode_from_obj(obj: dict) -> Barcode:
    grid = [str(x) for x in _require(obj, "grid", list)]
    pos = {label: i for i, label in enumerate(grid, start=1)}
    if len(pos) != len(grid):
        raise FormatError("grid labels must be distinct")
    counts = {}
    for e in _require(obj, "entries", list):
        try:
            b, d = pos[str(e["birth"])], pos[str(e["death"])]
        except (KeyError, TypeError):
            raise FormatError(f"entry {e!r} uses a label outside the grid") from None
        mult = _require(e, "multiplicity", int)
        dm = e.get("dim")
        if dm is not None and (not isinstance(dm, int) or isinstance(dm, bool)):
            raise FormatError(f"entry {e!r}: dim must be an integer or null")
        if b > d or mult < 1:
            raise FormatError(f"entry {e!r} is not a valid interval")
        counts[(b, d, dm)] = counts.get((b, d, dm), 0) + mult
    return Barcode(counts, grid)


def barcode_from_json(text: str) -> Barcode:
    return barcode_from_obj(_load(text))


def parse_dims(spec) -> range:
    """``"0..2"`` or ``[0, 2]`` or ``1`` -> inclusive range of homological dimensions."""
    if isinstance(spec, int) and not isinstance(spec, bool):
        return range(spec, spec + 1)
    if isinstance(spec, list) and len(spec) == 2 and all(isinstance(x, int) for x in spec):
        lo, hi = spec
    elif isinstance(spec, str):
        try:
            lo, hi = (int(x) for x in spec.split("..")) if ".." in spec else (int(spec),) * 2
        except ValueError:
            raise FormatError(f"bad dimension range {spec!r}") from None
    else:
        raise FormatError(f"bad dimension range {spec!r}")
    if not 0 <= lo <= hi:
        raise FormatError(f"bad dimension range {spec!r}")
    return range(lo, hi + 1)


class ComplexSequence:
    """Parsed complex-sequence file."""

    def __init__(self, p: int, n_vertices: int, complexes: list[SimplicialComplex], mode: str, dims: range):
        self.p = p
        self.n_vertices = n_vertices
        self.complexes = complexes
        self.mode = mode
        self.dims = dims


def complexes_from_obj(obj: dict) -> ComplexSequence:
    p = _require(obj, "field", int)
    nv = _require(obj, "vertices", int)
    mode = obj.get("mode", "union")
    if mode not in ("union", "intersection"):
        raise FormatError(f"mode must be 'union' or 'intersection', got {mode!r}")
    dims = parse_dims(obj.get("dims", [0, 1]))
    raw = _require(obj, "complexes", list)
    if not raw:
        raise FormatError("need at least one complex")
    complexes = []
    for i, simplices in enumerate(raw, start=1):
        if not isinstance(simplices, list) or not all(isinstance(s, list) for s in simplices):
            raise FormatError(f"complex {i} must be a list of vertex lists")
        try:
            given = {tuple(sorted(s)) for s in simplices}
            c = SimplicialComplex(nv, given)
        except (ValueError, TypeError) as exc:
            raise FormatError(f"complex {i}: {exc}") from None
        if len(c.simplices) != len(given - {()}):
            log.warning("complex %d was not closed under faces; added %d faces", i, len(c.simplices) - len(given))
        complexes.append(c)
    return ComplexSequence(p, nv, complexes, mode, dims)


def complexes_from_json(text: str) -> ComplexSequence:
    return complexes_from_obj(_load(text))


def _sorted_simplices(c: SimplicialComplex) -> list[list[int]]:
    return [list(s) for s in sorted(c.simplices, key=lambda s: (len(s), s))]


def complexes_to_json(seq: ComplexSequence) -> str:
    lines = [
        "{",
        f'  "field": {seq.p},',
        f'  "vertices": {seq.n_vertices},',
        f'  "mode": {json.dumps(seq.mode)},',
        f'  "dims": [{seq.dims.start}, {seq.dims.stop - 1}],',
        '  "complexes": [',
        ",\n".join(f"    {json.dumps(_sorted_simplices(c))}" for c in seq.complexes),
        "  ]",
        "}",
    ]
    return "\n".join(lines) + "\n"


def diamond_from_json(text: str):
    from .diamond import DiamondInstance

    obj = _load(text)
    k = _require(obj, "k", int)
    upper = module_from_obj(_require(obj, "upper", dict))
    lower = module_from_obj(_require(obj, "lower", dict))
    try:
        return DiamondInstance.from_modules(upper, lower, k)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def diamond_to_json(d) -> str:
    obj = {"k": d.k, "upper": module_to_obj(d.upper()), "lower": module_to_obj(d.lower())}
    return json.dumps(obj, indent=2) + "\n"
