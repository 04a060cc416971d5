"""JSON input and output for finite Hopf algebras.

Schema (indices 0-based, unlisted entries zero)::

    {"field": {"kind": "rational"} | {"kind": "prime", "p": 5}
              | {"kind": "cyclotomic", "n": 4, "base": {...}},
     "dim": 4,
     "basis": ["1", "g", "x", "gx"],
     "unit": ["1", "0", "0", "0"],
     "mul": [[i, j, k, "c"], ...],        e_i e_j contains c e_k
     "comul": [[i, j, k, "c"], ...],      Delta(e_i) contains c e_j (x) e_k
     "counit": [[i, "c"], ...],           eps(e_i) = c
     "antipode": [[i, j, "c"], ...]}      S(e_i) contains c e_j

The field may also be given as a spec string such as ``"cyc:4"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import FiniteAlgebra
from .errors import HopfError, InputError
from .hopf import FiniteHopfAlgebra
from .linalg import Matrix
from .scalars import parse_field

KEYS = ("field", "dim", "basis", "unit", "mul", "comul", "counit", "antipode")


def _index(value, dim, path):
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{path}: index must be an integer, got {value!r}", path=path)
    if not 0 <= value < dim:
        raise InputError(f"{path}: index {value} out of range 0..{dim - 1}", path=path)
    return value


def _scalar(field, value, path):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"{path}: coefficient must be a string or integer, got {value!r}", path=path)
    try:
        return field(str(value))
    except HopfError as exc:
        raise InputError(f"{path}: {exc}", path=path) from exc


def _entries(doc, key, width, dim):
    rows = doc[key]
    if not isinstance(rows, list):
        raise InputError(f"$.{key}: expected a list", path=f"$.{key}")
    for n, row in enumerate(rows):
        path = f"$.{key}[{n}]"
        if not isinstance(row, list) or len(row) != width:
            raise InputError(f"{path}: expected a list of {width} items", path=path)
        idx = tuple(_index(v, dim, f"{path}[{p}]") for p, v in enumerate(row[:-1]))
        yield path, idx, row[-1]


def hopf_from_dict(doc) -> FiniteHopfAlgebra:
    if not isinstance(doc, dict):
        raise InputError("$: expected a JSON object", path="$")
    for key in KEYS:
        if key not in doc and key != "basis":
            raise InputError(f"$.{key}: missing", path=f"$.{key}")
    try:
        field = parse_field(doc["field"])
    except HopfError as exc:
        raise InputError(f"$.field: {exc}", path="$.field") from exc
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputError("$.dim: expected a positive integer", path="$.dim")
    labels = doc.get("basis") or [f"e{i}" for i in range(dim)]
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(x, str) for x in labels):
        raise InputError(f"$.basis: expected {dim} strings", path="$.basis")
    unit = doc["unit"]
    if not isinstance(unit, list) or len(unit) != dim:
        raise InputError(f"$.unit: expected {dim} coefficients", path="$.unit")
    unit = [_scalar(field, c, f"$.unit[{n}]") for n, c in enumerate(unit)]

    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for path, (i, j, k), c in _entries(doc, "mul", 4, dim):
        cell = table[i][j]
        cell[k] = cell.get(k, field.zero) + _scalar(field, c, f"{path}[3]")
    comul = [{} for _ in range(dim)]
    for path, (i, j, k), c in _entries(doc, "comul", 4, dim):
        comul[i][(j, k)] = comul[i].get((j, k), field.zero) + _scalar(field, c, f"{path}[3]")
    counit = [field.zero] * dim
    for path, (i,), c in _entries(doc, "counit", 2, dim):
        counit[i] = counit[i] + _scalar(field, c, f"{path}[1]")
    rows = [[field.zero] * dim for _ in range(dim)]
    for path, (i, j), c in _entries(doc, "antipode", 3, dim):
        rows[j][i] = rows[j][i] + _scalar(field, c, f"{path}[2]")
    alg = FiniteAlgebra(field, table, unit, labels)
    return FiniteHopfAlgebra(alg, comul, counit, Matrix(field, rows, dim), name=doc.get("name"))


def load_hopf_json(path) -> FiniteHopfAlgebra:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", path=str(path)) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}", path="$") from exc
    h = hopf_from_dict(doc)
    h.name = h.name or p.stem
    return h


def hopf_to_dict(h: FiniteHopfAlgebra) -> dict:
    """Canonical JSON document; entries sorted by index."""
    out = {"field": h.field.to_json(), "dim": h.dim, "basis": list(h.labels),
           "unit": [str(c) for c in h.unit]}
    out["mul"] = [[i, j, k, str(c)] for i, j, k, c in h.algebra.triples()]
    out["comul"] = [[i, j, k, str(h.comul[i][(j, k)])]
                    for i in range(h.dim) for (j, k) in sorted(h.comul[i])]
    out["counit"] = [[i, str(c)] for i, c in enumerate(h.counit) if c]
    out["antipode"] = [[i, j, str(h.antipode[j, i])]
                       for i in range(h.dim) for j in range(h.dim) if h.antipode[j, i]]
    return out


def dump_hopf_json(h: FiniteHopfAlgebra) -> str:
    return json.dumps(hopf_to_dict(h), indent=1, ensure_ascii=False) + "\n"
