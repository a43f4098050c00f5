"""Exact einsum over Q and F_p.

Object-array einsum on Fractions is slow.  When every operand is a Fraction/int
array (or an F_p array) we clear denominators, bound the largest possible
partial sum and, if it fits in int64, contract machine integers instead.  The
result is converted back exactly; otherwise we fall back to object arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm, prod

import numpy as np

from .field import Fp

_LIMIT = 2 ** 62


def _to_ints(a: np.ndarray):
    """(int64 array, scale, max abs, modulus) or None if not convertible."""
    flat = a.reshape(-1)
    if flat.size == 0:
        return None
    first = flat[0]
    if isinstance(first, Fp):
        p = first.p
        vals = []
        for x in flat:
            if isinstance(x, Fp):
                if x.p != p:
                    return None
                vals.append(x.v)
            elif isinstance(x, int):
                vals.append(x % p)
            else:
                return None
        return np.array(vals, dtype=np.int64).reshape(a.shape), 1, p - 1, p
    den = 1
    for x in flat:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
        elif not isinstance(x, (int, np.integer)) or isinstance(x, bool):
            return None
    vals = [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in flat]
    m = max(abs(v) for v in vals)
    if m >= _LIMIT:
        return None
    return np.array(vals, dtype=np.int64).reshape(a.shape), den, m, 0


def _summed_terms(subscripts: str, shapes) -> int | None:
    if "..." in subscripts or "->" not in subscripts:
        return None
    ins, out = subscripts.replace(" ", "").split("->")
    sizes = {}
    for term, shape in zip(ins.split(","), shapes):
        if len(term) != len(shape):
            return None
        for c, n in zip(term, shape):
            sizes[c] = n
    return prod(n for c, n in sizes.items() if c not in out)


def es(subscripts, *operands):
    ops = [np.asarray(o, dtype=object) for o in operands]
    terms = _summed_terms(subscripts, [o.shape for o in ops])
    conv = [_to_ints(o) for o in ops] if terms is not None else [None]
    if any(c is None for c in conv):
        return np.einsum(subscripts, *ops, optimize=True)
    mods = {c[3] for c in conv} - {0}
    if len(mods) > 1 or (mods and any(c[3] == 0 and c[1] != 1 for c in conv)):
        return np.einsum(subscripts, *ops, optimize=True)
    bound = max(terms, 1)
    for c in conv:
        bound *= max(c[2], 1)
    if bound >= _LIMIT:
        return np.einsum(subscripts, *ops, optimize=True)
    res = np.asarray(np.einsum(subscripts, *[c[0] for c in conv], optimize=True))
    out = np.empty(res.shape, dtype=object)
    flat, rf = out.reshape(-1), res.reshape(-1)
    if mods:
        p = mods.pop()
        for i, v in enumerate(rf):
            flat[i] = Fp(int(v), p)
    else:
        scale = prod(c[1] for c in conv)
        for i, v in enumerate(rf):
            flat[i] = Fraction(int(v), scale)
    return out if out.shape else out[()]
