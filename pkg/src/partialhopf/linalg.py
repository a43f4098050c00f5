"""Dense exact linear algebra over a :class:`~partialhopf.field.Field`.

Matrices are 2-d numpy object arrays.  Pivoting picks the first nonzero entry
in column order; no numerical pivoting is needed in exact arithmetic.
"""
from __future__ import annotations

import numpy as np

from .field import Field


def _field_of(m: np.ndarray, field: Field | None) -> Field:
    if field is not None:
        return field
    for x in m.flat:
        if hasattr(x, "p"):
            return Field(x.p)
        break
    return Field()


def rref(m: np.ndarray, field: Field | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    r = np.array(m, dtype=object, copy=True)
    if r.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = r.shape
    pivots: list[int] = []
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        nz = [i for i in range(pr, rows) if r[i, c] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != pr:
            r[[pr, i]] = r[[i, pr]]
        r[pr] = r[pr] / r[pr, c]
        for i in range(rows):
            if i != pr and r[i, c] != 0:
                r[i] = r[i] - r[i, c] * r[pr]
        pivots.append(c)
        pr += 1
    return r, pivots


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(rref(m)[1])


def span_basis(vectors, length: int | None = None, field: Field | None = None) -> np.ndarray:
    """Basis (rref rows, zero rows dropped) of the span of ``vectors``."""
    vs = [np.asarray(v, dtype=object) for v in vectors]
    if not vs:
        if length is None:
            raise ValueError("length is required for an empty vector list")
        return np.empty((0, length), dtype=object)
    if any(len(v) != len(vs[0]) for v in vs):
        raise ValueError("vectors have different lengths")
    r, piv = rref(np.array(vs, dtype=object), field)
    return r[: len(piv)]


def solve(a: np.ndarray, b: np.ndarray, field: Field | None = None):
    """One solution ``x`` of ``a @ x = b`` (free variables set to zero), or None."""
    f = _field_of(a, field)
    b = np.asarray(b, dtype=object)
    rows, cols = a.shape
    aug = np.concatenate([a, b.reshape(rows, -1)], axis=1)
    r, piv = rref(aug, f)
    if any(p >= cols for p in piv):
        return None
    x = f.zeros((cols,) + b.shape[1:])
    flat = x.reshape(cols, -1)
    for i, p in enumerate(piv):
        flat[p] = r[i, cols:]
    return flat.reshape(x.shape)


def nullspace(a: np.ndarray, field: Field | None = None) -> np.ndarray:
    """Rows spanning the right kernel of ``a``."""
    f = _field_of(a, field)
    rows, cols = a.shape
    r, piv = rref(a, f)
    free = [c for c in range(cols) if c not in piv]
    out = f.zeros((len(free), cols))
    for k, c in enumerate(free):
        out[k, c] = f.one
        for i, p in enumerate(piv):
            out[k, p] = -r[i, c]
    return out


def invert(m: np.ndarray, field: Field | None = None):
    """Exact two-sided inverse of a square matrix, or None if singular."""
    n, n2 = m.shape
    if n != n2:
        raise ValueError("invert expects a square matrix")
    f = _field_of(m, field)
    r, piv = rref(np.concatenate([m, f.eye(n)], axis=1), f)
    if piv[:n] != list(range(n)):
        return None
    return r[:, n:]


def membership(v: np.ndarray, basis: np.ndarray, field: Field | None = None):
    """Coordinates ``c`` with ``c @ basis == v``, or None when ``v`` is outside the span.

    ``basis`` rows must be linearly independent.
    """
    if basis.shape[0] == 0:
        return np.empty(0, dtype=object) if all(x == 0 for x in v) else None
    return SpanCoordinates(basis, field).coords(v)


class SpanCoordinates:
    """Fast repeated membership tests against a fixed row basis."""

    def __init__(self, basis: np.ndarray, field: Field | None = None):
        basis = np.asarray(basis, dtype=object)
        f = _field_of(basis, field)
        self.field = f
        self.basis = basis
        k, n = basis.shape
        self.dim = k
        if k == 0:
            self.pivots: list[int] = []
            self.r = basis
            self.t = f.zeros((0, 0))
            return
        aug = np.concatenate([basis, f.eye(k)], axis=1)
        r, piv = rref(aug, f)
        if len([p for p in piv if p < n]) != k:
            raise ValueError("basis rows are linearly dependent")
        self.pivots = piv[:k]
        self.r = r[:, :n]
        # t @ basis == r
        self.t = r[:, n:]

    def coords_many(self, vs: np.ndarray):
        """Coordinates for each row of ``vs``; None entries where outside the span."""
        vs = np.asarray(vs, dtype=object)
        if self.dim == 0:
            return [np.empty(0, dtype=object) if all(x == 0 for x in v) else None for v in vs]
        c = vs[:, self.pivots]
        back = c.dot(self.r)
        out = []
        cb = c.dot(self.t)
        for i in range(vs.shape[0]):
            out.append(cb[i] if np.array_equal(back[i], vs[i]) else None)
        return out

    def coords(self, v: np.ndarray):
        return self.coords_many(np.asarray(v, dtype=object).reshape(1, -1))[0]

    def contains(self, v: np.ndarray) -> bool:
        return self.coords(v) is not None


def is_zero(a) -> bool:
    return all(x == 0 for x in np.asarray(a, dtype=object).flat)


def fmt_vector(v, field: Field) -> str:
    return "[" + ", ".join(field.format(x) for x in np.asarray(v, dtype=object).flat) + "]"
