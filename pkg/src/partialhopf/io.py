"""JSON files for algebras, Hopf algebras and actions.

Coefficients are always strings ("3/2", "-1", or a residue for F_p) so no value
passes through floating point.  Structure constants are sparse on disk:

    mult[i][j]  = [[k, "c"], ...]
    comult[i]   = [[j, k, "c"], ...]
    left[h][a]  = [[a', "c"], ...]

An action file names its Hopf algebra and algebra either by relative path or inline.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .actions import PartialBimoduleData
from .field import Field
from .hopf import AlgebraData, CoalgebraData, HopfData, StructureError


class ParseError(ValueError):
    """Malformed input; ``where`` names the file and JSON path."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


# --------------------------------------------------------------------------
# writing

def _fmt(f: Field, x) -> str:
    return f.format(x)


def dense(f: Field, a) -> list:
    a = np.asarray(a, dtype=object)
    if a.ndim == 0:
        return _fmt(f, a[()])
    return [dense(f, r) for r in a]


def sparse3(f: Field, t: np.ndarray) -> list:
    """t[i, j, k] -> out[i][j] = [[k, c], ...] over nonzero entries."""
    return [[[[int(k), _fmt(f, t[i, j, k])] for k in range(t.shape[2]) if t[i, j, k] != 0]
             for j in range(t.shape[1])] for i in range(t.shape[0])]


def sparse_comult(f: Field, c: np.ndarray) -> list:
    n = c.shape[0]
    return [[[int(j), int(k), _fmt(f, c[i, j, k])] for j in range(n) for k in range(n) if c[i, j, k] != 0]
            for i in range(n)]


def algebra_to_json(a) -> dict:
    """AlgebraData or HopfData -> AlgebraFile dict (unit omitted when absent)."""
    alg = a.algebra if isinstance(a, HopfData) else a
    f = alg.field
    out = {"field": f.descriptor(), "dim": alg.dim, "basis_names": list(alg.names),
           "mult": sparse3(f, alg.mult)}
    if alg.unit is not None:
        out["unit"] = dense(f, alg.unit)
    if isinstance(a, HopfData):
        out["comult"] = sparse_comult(f, a.comult)
        out["counit"] = dense(f, a.counit)
        out["antipode"] = dense(f, a.antipode)
    return out


def action_to_json(d: PartialBimoduleData, h_ref=None, a_ref=None) -> dict:
    """ActionFile dict; H and A go inline unless a path reference is given."""
    f = d.field
    return {"name": d.name,
            "H": h_ref if h_ref is not None else algebra_to_json(d.H),
            "A": a_ref if a_ref is not None else algebra_to_json(d.A),
            "left": sparse3(f, d.left),
            "right": sparse3(f, d.right)}


# --------------------------------------------------------------------------
# reading

def _need(d, key, where):
    if not isinstance(d, dict):
        raise ParseError(where, "expected a JSON object")
    if key not in d:
        raise ParseError(where, f"missing key '{key}'")
    return d[key]


def _scalar(f: Field, s, where):
    if not isinstance(s, str):
        raise ParseError(where, f"coefficient {s!r} must be a string")
    try:
        return f.parse(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(where, f"bad coefficient {s!r}: {exc}") from None


def _index(i, n, where):
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n:
        raise ParseError(where, f"index {i!r} out of range 0..{n - 1}")
    return i


def _dense_vec(f, v, n, where):
    if not isinstance(v, list) or len(v) != n:
        raise ParseError(where, f"expected a list of {n} coefficients")
    return np.array([_scalar(f, s, f"{where}[{i}]") for i, s in enumerate(v)] or [], dtype=object)


def _read_sparse3(f, data, n0, n1, n2, where) -> np.ndarray:
    t = f.zeros((n0, n1, n2))
    if not isinstance(data, list) or len(data) != n0:
        raise ParseError(where, f"expected {n0} rows")
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n1:
            raise ParseError(f"{where}[{i}]", f"expected {n1} entries")
        for j, terms in enumerate(row):
            w = f"{where}[{i}][{j}]"
            if not isinstance(terms, list):
                raise ParseError(w, "expected a list of [index, coefficient] pairs")
            for term in terms:
                if not isinstance(term, list) or len(term) != 2:
                    raise ParseError(w, f"bad term {term!r}")
                k = _index(term[0], n2, w)
                t[i, j, k] = t[i, j, k] + _scalar(f, term[1], w)
    return t


def resolve_field(d: dict, where: str, override: Field | None) -> Field:
    if override is not None:
        return override
    try:
        return Field.from_descriptor(d.get("field", "Q"))
    except ValueError as exc:
        raise ParseError(f"{where}.field", str(exc)) from None


def algebra_from_json(d: dict, where: str = "<input>", field: Field | None = None):
    """AlgebraFile dict -> AlgebraData, or HopfData when a coproduct is present."""
    f = resolve_field(d, where, field)
    n = _need(d, "dim", where)
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"{where}.dim", "dim must be a positive integer")
    names = d.get("basis_names") or [f"e{i}" for i in range(n)]
    if len(names) != n:
        raise ParseError(f"{where}.basis_names", "length differs from dim")
    mult = _read_sparse3(f, _need(d, "mult", where), n, n, n, f"{where}.mult")
    unit = _dense_vec(f, d["unit"], n, f"{where}.unit") if "unit" in d else None
    try:
        alg = AlgebraData(f, mult, unit, tuple(names))
    except StructureError as exc:
        raise ParseError(where, str(exc)) from None
    if "comult" not in d:
        return alg
    if unit is None:
        raise ParseError(f"{where}.unit", "a Hopf algebra needs a unit")
    comult = f.zeros((n, n, n))
    rows = d["comult"]
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"{where}.comult", f"expected {n} rows")
    for i, terms in enumerate(rows):
        w = f"{where}.comult[{i}]"
        for term in terms if isinstance(terms, list) else [None]:
            if not isinstance(term, list) or len(term) != 3:
                raise ParseError(w, f"bad term {term!r}")
            j, k = _index(term[0], n, w), _index(term[1], n, w)
            comult[i, j, k] = comult[i, j, k] + _scalar(f, term[2], w)
    counit = _dense_vec(f, _need(d, "counit", where), n, f"{where}.counit")
    anti = _need(d, "antipode", where)
    if not isinstance(anti, list) or len(anti) != n:
        raise ParseError(f"{where}.antipode", f"expected a {n}x{n} matrix")
    s = np.array([_dense_vec(f, r, n, f"{where}.antipode[{i}]") for i, r in enumerate(anti)], dtype=object)
    return HopfData(alg, CoalgebraData(f, comult, counit), s.reshape(n, n))


def _load_json(path: Path):
    try:
        return json.loads(path.read_text())
    except OSError as exc:
        raise ParseError(str(path), f"cannot read: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(str(path), f"invalid JSON: {exc.msg} at line {exc.lineno}") from None


def _ref(ref, base: Path, where: str, field):
    if isinstance(ref, str):
        p = base / ref
        return algebra_from_json(_load_json(p), str(p), field)
    return algebra_from_json(ref, where, field)


def action_from_json(d: dict, where: str = "<input>", base: Path = Path("."),
                     field: Field | None = None) -> PartialBimoduleData:
    H = _ref(_need(d, "H", where), base, f"{where}.H", field)
    A = _ref(_need(d, "A", where), base, f"{where}.A", field)
    if not isinstance(H, HopfData):
        raise ParseError(f"{where}.H", "the acting algebra needs comult, counit and antipode")
    if isinstance(A, HopfData):
        A = A.algebra
    if A.unit is None:
        raise ParseError(f"{where}.A", "the algebra needs a unit")
    if H.field != A.field:
        raise ParseError(where, "H and A are over different fields")
    f = H.field
    left = _read_sparse3(f, _need(d, "left", where), H.dim, A.dim, A.dim, f"{where}.left")
    right = _read_sparse3(f, _need(d, "right", where), H.dim, A.dim, A.dim, f"{where}.right")
    return PartialBimoduleData(H, A, left, right, d.get("name", ""))


def load_algebra(path, field: Field | None = None):
    """Read an AlgebraFile, or the ``algebra`` member of a build output."""
    p = Path(path)
    d = _load_json(p)
    if isinstance(d, dict) and "algebra" in d and "mult" not in d:
        return algebra_from_json(d["algebra"], f"{p}.algebra", field)
    return algebra_from_json(d, str(p), field)


def load_action(path, field: Field | None = None) -> PartialBimoduleData:
    p = Path(path)
    d = _load_json(p)
    if isinstance(d, dict) and "action" in d and "left" not in d:
        return action_from_json(d["action"], f"{p}.action", p.parent, field)
    return action_from_json(d, str(p), p.parent, field)


def write(path, obj) -> None:
    Path(path).write_text(dumps(obj))
