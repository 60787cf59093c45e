"""Workspace files: one JSON document holding a field and named objects.

Layout::

    {"field": {"kind": "prime", "N": 3, "p": 7, "q": "2"},
     "complexes": {"X": {"dims": {"0": 1, "1": 1}, "d": {"0": [["1"]]}}},
     "maps": {"f": {"source": "X", "target": "X", "degree": 0,
                    "components": {"0": [["1"]], "1": [["1"]]}}},
     "categories": {"T": {"objects": ["*"],
                          "hom": [{"source": "*", "target": "*", "complex": {...}}],
                          "unit": {"*": ["1"]},
                          "compose": [{"objects": ["*", "*", "*"], "degrees": [r, s],
                                       "table": [[i, j, [v0, v1, ...]], ...]}]}},
     "modules": {"M": {"category": "T", "side": "right", "value": {"*": {...}},
                       "action": [{"objects": [A1, A2], "degrees": [s, t],
                                   "table": [[i, j, [...]]]}]}},
     "bimodules": {"B": {"left": "T", "right": "T",
                         "value": [{"objects": [a, b], "complex": {...}}],
                         "left_action": [{"objects": [a, b1, b2], "degrees": [t, s], ...}],
                         "right_action": [{"objects": [a1, a2, b], "degrees": [s, t], ...}]}}}

Scalars are strings ("3", "-1", "1/2"); over Q(zeta_N) a scalar is a list of
coefficient strings in the power basis. Table rows list only nonzero products.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict

from .errors import NdgError, ParseError, UnknownName, ValidationError
from .linalg import Matrix
from .ncx.core import GradedMap, NComplex, check_nilpotent
from .ndgcat.category import NdgCategory, validate_category
from .ndgcat.modules import NdgBimodule, NdgModule, validate_bimodule, validate_module
from .scalars import Field, FieldSpec, make_field


@dataclass
class Workspace:
    spec: FieldSpec
    field: Field
    complexes: Dict[str, NComplex] = field(default_factory=dict)
    maps: Dict[str, GradedMap] = field(default_factory=dict)
    categories: Dict[str, NdgCategory] = field(default_factory=dict)
    modules: Dict[str, NdgModule] = field(default_factory=dict)
    bimodules: Dict[str, NdgBimodule] = field(default_factory=dict)

    def lookup(self, table: str, name: str):
        try:
            return getattr(self, table)[name]
        except KeyError:
            kind = {"complexes": "complex"}.get(table, table[:-1])
            raise UnknownName(f"no {kind} named {name!r}") from None


# ---------------------------------------------------------------- scalars and matrices

def _matrix(F: Field, rows, n_rows: int, n_cols: int, where: str) -> Matrix:
    if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
        raise ParseError(f"{where}: expected a {n_rows}x{n_cols} matrix")
    try:
        return Matrix(F, F.asarray([[F(x) for x in r] for r in rows])
                      if n_rows and n_cols else F.zeros((n_rows, n_cols)))
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"{where}: bad scalar ({exc})") from None


def _vector(F: Field, vals, n: int, where: str) -> Matrix:
    return _matrix(F, [[v] for v in vals], n, 1, where)


def _dump_matrix(F: Field, m: Matrix):
    return [[F.format(m.data[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def _int_keys(obj, where):
    try:
        return {int(k): v for k, v in obj.items()}
    except (ValueError, AttributeError):
        raise ParseError(f"{where}: keys must be integer degrees") from None


def parse_complex(F: Field, obj, where: str) -> NComplex:
    if not isinstance(obj, dict) or "dims" not in obj:
        raise ParseError(f"{where}: a complex needs 'dims'")
    dims = {k: int(v) for k, v in _int_keys(obj["dims"], where).items() if int(v)}
    d = {}
    for i, rows in _int_keys(obj.get("d", {}), where).items():
        d[i] = _matrix(F, rows, dims.get(i + 1, 0), dims.get(i, 0), f"{where}.d[{i}]")
    return NComplex(F, dims, d)


def dump_complex(X: NComplex):
    F = X.field
    return {"dims": {str(i): n for i, n in sorted(X.dims.items())},
            "d": {str(i): _dump_matrix(F, m) for i, m in sorted(X.d.items())
                  if not m.is_zero()}}


def _parse_table(F: Field, entry, L, R, O, where) -> tuple:
    s, t = (int(v) for v in entry["degrees"])
    ncols = L.dim(s) * R.dim(t)
    out = F.zeros((O.dim(s + t), ncols))
    for row in entry.get("table", []):
        i, j, vec = row
        if not (0 <= i < L.dim(s) and 0 <= j < R.dim(t)):
            raise ParseError(f"{where}: basis index ({i}, {j}) out of range at {(s, t)}")
        out[:, i * R.dim(t) + j] = _vector(F, vec, O.dim(s + t), where).data[:, 0]
    return (s, t), Matrix(F, out)


def _dump_table(F: Field, blocks, L, R):
    out = []
    for (s, t), m in sorted(blocks.items()):
        rows = []
        for col in range(m.cols):
            c = m.col(col)
            if c.is_zero():
                continue
            i, j = divmod(col, R.dim(t))
            rows.append([i, j, [F.format(c.data[k, 0]) for k in range(c.rows)]])
        if rows:
            out.append({"degrees": [s, t], "table": rows})
    return out


# ---------------------------------------------------------------- load

def parse_workspace(obj) -> Workspace:
    if not isinstance(obj, dict) or "field" not in obj:
        raise ParseError("workspace: missing 'field'")
    try:
        spec = FieldSpec.from_json(obj["field"])
        F = make_field(spec)
    except NdgError as exc:
        raise ValidationError(f"field: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"field: {exc}") from None
    ws = Workspace(spec, F)
    try:
        _load_all(ws, obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed workspace: {exc!r}") from None
    return ws


def _load_all(ws: Workspace, obj):
    F = ws.field
    for name, c in obj.get("complexes", {}).items():
        X = parse_complex(F, c, f"complexes.{name}")
        try:
            check_nilpotent(X)
        except NdgError as exc:
            raise ValidationError(f"complex {name!r}: d^N != 0 at degree "
                                  f"{getattr(exc, 'degree', '?')}") from exc
        ws.complexes[name] = X
    for name, m in obj.get("maps", {}).items():
        src = ws.lookup("complexes", m["source"])
        tgt = ws.lookup("complexes", m["target"])
        deg = int(m.get("degree", 0))
        comps = {i: _matrix(F, rows, tgt.dim(i + deg), src.dim(i), f"maps.{name}[{i}]")
                 for i, rows in _int_keys(m.get("components", {}), f"maps.{name}").items()}
        ws.maps[name] = GradedMap(src, tgt, deg, comps)
    for name, c in obj.get("categories", {}).items():
        ws.categories[name] = _load_category(F, name, c)
    for name, m in obj.get("modules", {}).items():
        ws.modules[name] = _load_module(ws, name, m)
    for name, m in obj.get("bimodules", {}).items():
        ws.bimodules[name] = _load_bimodule(ws, name, m)


def _load_category(F, name, c) -> NdgCategory:
    where = f"categories.{name}"
    objs = list(c["objects"])
    if len(set(objs)) != len(objs):
        raise ValidationError(f"{where}: duplicate object names")
    hom = {}
    for h in c.get("hom", []):
        key = (h["source"], h["target"])
        for o in key:
            if o not in objs:
                raise ParseError(f"{where}: unknown object {o!r}")
        hom[key] = parse_complex(F, h["complex"], f"{where}.hom{key}")
    zero = NComplex(F, {}, {})
    unit = {A: _vector(F, c["unit"][A], hom.get((A, A), zero).dim(0), f"{where}.unit.{A}")
            for A in objs}
    comp = {}
    for e in c.get("compose", []):
        A, B, C = e["objects"]
        key, m = _parse_table(F, e, hom.get((B, C), zero), hom.get((A, B), zero),
                              hom.get((A, C), zero), f"{where}.compose")
        comp.setdefault((A, B, C), {})[key] = m
    cat = NdgCategory(F, objs, hom, unit, comp)
    try:
        return validate_category(cat)
    except NdgError as exc:
        raise ValidationError(f"category {name!r}: {exc}") from exc


def _load_module(ws, name, m) -> NdgModule:
    F = ws.field
    where = f"modules.{name}"
    C = ws.lookup("categories", m["category"])
    side = m.get("side", "right")
    value = {A: parse_complex(F, v, f"{where}.value.{A}") for A, v in m["value"].items()}
    probe = NdgModule(C, side, value, {})
    action = {}
    for e in m.get("action", []):
        A1, A2 = e["objects"]
        L, R, O = probe._factors(A1, A2)
        key, mat = _parse_table(F, e, L, R, O, where)
        action.setdefault((A1, A2), {})[key] = mat
    X = NdgModule(C, side, value, action)
    try:
        return validate_module(X)
    except NdgError as exc:
        raise ValidationError(f"module {name!r}: {exc}") from exc


def _load_bimodule(ws, name, m) -> NdgBimodule:
    F = ws.field
    where = f"bimodules.{name}"
    B = ws.lookup("categories", m["left"])
    A = ws.lookup("categories", m["right"])
    value = {}
    for e in m.get("value", []):
        a, b = e["objects"]
        value[(a, b)] = parse_complex(F, e["complex"], f"{where}.value{(a, b)}")
    probe = NdgBimodule(B, A, value, {}, {})
    left, right = {}, {}
    for e in m.get("left_action", []):
        a, b1, b2 = e["objects"]
        key, mat = _parse_table(F, e, B.Hom(b1, b2), probe.at(a, b1), probe.at(a, b2), where)
        left.setdefault((a, b1, b2), {})[key] = mat
    for e in m.get("right_action", []):
        a1, a2, b = e["objects"]
        key, mat = _parse_table(F, e, probe.at(a1, b), A.Hom(a2, a1), probe.at(a2, b), where)
        right.setdefault((a1, a2, b), {})[key] = mat
    M = NdgBimodule(B, A, value, left, right)
    try:
        return validate_bimodule(M)
    except NdgError as exc:
        raise ValidationError(f"bimodule {name!r}: {exc}") from exc


def load_workspace(path: str) -> Workspace:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return parse_workspace(obj)


# ---------------------------------------------------------------- dump

def dump_category(C: NdgCategory):
    F = C.field
    out = {"objects": list(C.objects),
           "hom": [{"source": A, "target": B, "complex": dump_complex(H)}
                   for (A, B), H in C.hom.items()],
           "unit": {A: [F.format(u.data[i, 0]) for i in range(u.rows)]
                    for A, u in C.unit.items()},
           "compose": []}
    for (A, B, Cc), blocks in C.compose.items():
        for e in _dump_table(F, blocks, C.Hom(B, Cc), C.Hom(A, B)):
            out["compose"].append({"objects": [A, B, Cc], **e})
    return out


def dump_module(X: NdgModule, cat_name: str):
    F = X.field
    out = {"category": cat_name, "side": X.side,
           "value": {A: dump_complex(V) for A, V in X.value.items()}, "action": []}
    for (A1, A2), blocks in X.action.items():
        L, R, _ = X._factors(A1, A2)
        for e in _dump_table(F, blocks, L, R):
            out["action"].append({"objects": [A1, A2], **e})
    return out


def dump_bimodule(M: NdgBimodule, left_name: str, right_name: str):
    F = M.field
    out = {"left": left_name, "right": right_name,
           "value": [{"objects": [a, b], "complex": dump_complex(V)}
                     for (a, b), V in M.value.items()],
           "left_action": [], "right_action": []}
    for (a, b1, b2), blocks in M.left.items():
        for e in _dump_table(F, blocks, M.left_base.Hom(b1, b2), M.at(a, b1)):
            out["left_action"].append({"objects": [a, b1, b2], **e})
    for (a1, a2, b), blocks in M.right.items():
        for e in _dump_table(F, blocks, M.at(a1, b), M.right_base.Hom(a2, a1)):
            out["right_action"].append({"objects": [a1, a2, b], **e})
    return out


def dump_workspace(ws: Workspace):
    def name_of(table, obj):
        for k, v in table.items():
            if v is obj:
                return k
        raise UnknownName("object not registered in the workspace")

    return {
        "field": ws.spec.to_json(),
        "complexes": {n: dump_complex(X) for n, X in ws.complexes.items()},
        "maps": {n: {"source": name_of(ws.complexes, f.source),
                     "target": name_of(ws.complexes, f.target),
                     "degree": f.degree,
                     "components": {str(i): _dump_matrix(ws.field, m)
                                    for i, m in sorted(f.components.items())}}
                 for n, f in ws.maps.items()},
        "categories": {n: dump_category(C) for n, C in ws.categories.items()},
        "modules": {n: dump_module(X, name_of(ws.categories, X.base))
                    for n, X in ws.modules.items()},
        "bimodules": {n: dump_bimodule(M, name_of(ws.categories, M.left_base),
                                       name_of(ws.categories, M.right_base))
                      for n, M in ws.bimodules.items()},
    }


def dumps_workspace(ws: Workspace) -> str:
    return json.dumps(dump_workspace(ws), indent=1, sort_keys=False)
