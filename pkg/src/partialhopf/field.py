"""Exact scalar fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field elements are
:class:`Fp` instances carrying their modulus, so arithmetic never silently mixes
fields.  Arrays of scalars are numpy ``object`` arrays; use :meth:`Field.array`
and :meth:`Field.zeros` to build them with canonical entries.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


class Fp:
    """Residue class modulo a prime ``p``, stored canonically in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return Fp(pow(self.v, -1, self.p), self.p) ** (-k)
        return Fp(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """A scalar field: ``Field()`` is Q, ``Field(p)`` is F_p."""

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if not self.p else f"GF({self.p})"

    def __call__(self, x):
        """Coerce an int, Fraction, Fp or string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if not self.p:
            if isinstance(x, Fp):
                raise ValueError("cannot coerce an F_p element into Q")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ValueError(f"cannot coerce F_{x.p} into F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Fp(int(x), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s: str):
        s = s.strip()
        if not self.p:
            return Fraction(s)
        if "/" in s:
            return self(Fraction(s))
        return Fp(int(s), self.p)

    def format(self, x) -> str:
        x = self(x)
        if not self.p:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x.v)

    def descriptor(self):
        return "Q" if not self.p else {"Fp": self.p}

    @classmethod
    def from_descriptor(cls, d) -> "Field":
        if d == "Q":
            return cls()
        if isinstance(d, dict) and set(d) == {"Fp"}:
            return cls(int(d["Fp"]))
        raise ValueError(f"unknown field descriptor {d!r}")

    @classmethod
    def from_flag(cls, s: str) -> "Field":
        """Parse the CLI spelling ``q`` or ``fp:<p>``."""
        s = s.strip().lower()
        if s == "q":
            return cls()
        if s.startswith("fp:"):
            return cls(int(s[3:]))
        raise ValueError(f"unknown field {s!r}; use q or fp:<p>")

    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=object)
        out = np.empty(a.shape, dtype=object)
        for idx in np.ndindex(a.shape):
            out[idx] = self(a[idx])
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def ones(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.one)
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def basis_vector(self, n: int, i: int) -> np.ndarray:
        v = self.zeros(n)
        v[i] = self.one
        return v


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)
