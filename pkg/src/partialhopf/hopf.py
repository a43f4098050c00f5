"""Based finite-dimensional algebras, coalgebras and Hopf algebras.

Structure constants are dense tensors over an exact field:

* ``mult[i, j, k]``: coefficient of ``e_k`` in ``e_i e_j``;
* ``comult[i, j, k]``: coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``;
* linear maps are matrices whose column ``j`` is the image of basis vector ``j``.

Tensor products use the lexicographic basis ``e_i (x) f_j -> i * dim(f) + j``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Field
from .linalg import invert, nullspace, rank, solve
from .report import VerificationReport
from .tensor import es  # noqa: F401  (re-exported)


class StructureError(ValueError):
    """Malformed structure constants (shapes, field mismatch)."""


class AntipodeError(ValueError):
    """The antipode is missing or not invertible."""




@dataclass(eq=False)
class AlgebraData:
    field: Field
    mult: np.ndarray
    unit: np.ndarray
    names: tuple = ()

    def __post_init__(self):
        n = self.mult.shape[0] if self.unit is None else len(self.unit)
        if self.mult.shape != (n, n, n):
            raise StructureError(f"mult has shape {self.mult.shape}, expected {(n, n, n)}")
        if not self.names:
            self.names = tuple(f"e{i}" for i in range(n))
        if len(self.names) != n:
            raise StructureError("basis_names length differs from dim")
        self.names = tuple(self.names)

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    def mul(self, x, y):
        return es("i,j,ijk->k", x, y, self.mult)

    def e(self, i):
        return self.field.basis_vector(self.dim, i)


@dataclass(eq=False)
class CoalgebraData:
    field: Field
    comult: np.ndarray
    counit: np.ndarray

    def __post_init__(self):
        n = len(self.counit)
        if self.comult.shape != (n, n, n):
            raise StructureError(f"comult has shape {self.comult.shape}, expected {(n, n, n)}")

    @property
    def dim(self) -> int:
        return len(self.counit)


@dataclass(eq=False)
class HopfData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: np.ndarray

    def __post_init__(self):
        n = self.algebra.dim
        if self.coalgebra.dim != n:
            raise StructureError("algebra and coalgebra dimensions differ")
        if self.antipode.shape != (n, n):
            raise StructureError(f"antipode has shape {self.antipode.shape}, expected {(n, n)}")
        if self.algebra.field != self.coalgebra.field:
            raise StructureError("algebra and coalgebra fields differ")

    field = property(lambda self: self.algebra.field)
    dim = property(lambda self: self.algebra.dim)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)
    names = property(lambda self: self.algebra.names)

    def mul(self, x, y):
        return self.algebra.mul(x, y)

    def e(self, i):
        return self.algebra.e(i)


@dataclass(eq=False)
class LinMap:
    """A linear map between coordinate spaces; column j is the image of e_j."""

    matrix: np.ndarray

    @property
    def source_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def target_dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, v):
        return self.matrix.dot(np.asarray(v, dtype=object))


def make_hopf(field, mult, unit, comult, counit, antipode, names=()) -> HopfData:
    f = field
    return HopfData(AlgebraData(f, f.array(mult), f.array(unit), tuple(names)),
                    CoalgebraData(f, f.array(comult), f.array(counit)),
                    f.array(antipode))


def iterated_coproduct(h, legs: int) -> np.ndarray:
    """``Delta^(legs)`` with left-nested expansion, shape ``(n,)*(legs+1)``."""
    c = h.comult
    n = c.shape[0]
    if legs == 1:
        return h.field.eye(n)
    out = c
    for _ in range(legs - 2):
        # out[i, l1..lk]; replace l1 by Delta(l1) -> out'[i, a, b, l2..lk]
        out = es("im...,mab->iab...", out, c)
    return out


def antipode_power(h: HopfData, k: int) -> np.ndarray:
    s = h.antipode
    if k < 0:
        s = antipode_inverse(h)
        k = -k
    out = h.field.eye(h.dim)
    for _ in range(k):
        out = s.dot(out)
    return out


# --------------------------------------------------------------------------
# axiom checks

_LEVELS = ("algebra", "coalgebra", "bialgebra", "hopf")


def _check_algebra(a: AlgebraData, rep: VerificationReport, tag: str = ""):
    f, m, u = a.field, a.mult, a.unit
    n = a.dim
    names = [a.names] * 3
    lhs = es("ijm,mkl->ijkl", m, m)
    rhs = es("jkm,iml->ijkl", m, m)
    rep.compare(tag + "associativity", "algebra axiom: (xy)z = x(yz)", lhs, rhs, 3, f, names)
    if u is None:
        rep.skip(tag + "left unit", "algebra axiom: 1x = x", "algebra has no unit")
        rep.skip(tag + "right unit", "algebra axiom: x1 = x", "algebra has no unit")
        return
    left = es("i,ijk->jk", u, m)
    right = es("j,ijk->ik", u, m)
    rep.compare(tag + "left unit", "algebra axiom: 1x = x", left, f.eye(n), 1, f, names)
    rep.compare(tag + "right unit", "algebra axiom: x1 = x", right, f.eye(n), 1, f, names)


def _check_coalgebra(c: CoalgebraData, rep: VerificationReport, names, tag: str = ""):
    f, d, e = c.field, c.comult, c.counit
    n = c.dim
    lhs = es("imc,mab->iabc", d, d)
    rhs = es("iam,mbc->iabc", d, d)
    rep.compare(tag + "coassociativity", "coalgebra axiom: (Delta (x) id)Delta = (id (x) Delta)Delta",
                lhs, rhs, 1, f, [names])
    rep.compare(tag + "left counit", "coalgebra axiom: (eps (x) id)Delta = id",
                es("j,ijk->ik", e, d), f.eye(n), 1, f, [names])
    rep.compare(tag + "right counit", "coalgebra axiom: (id (x) eps)Delta = id",
                es("k,ijk->ij", e, d), f.eye(n), 1, f, [names])


def _check_bialgebra(h: HopfData, rep: VerificationReport, tag: str = ""):
    f, m, d, u, e = h.field, h.mult, h.comult, h.unit, h.counit
    names = [h.names] * 2
    lhs = es("ijm,mab->ijab", m, d)
    rhs = es("ipq,jrs,pra,qsb->ijab", d, d, m, m)
    rep.compare(tag + "comultiplication is multiplicative", "bialgebra axiom: Delta(xy) = Delta(x)Delta(y)",
                lhs, rhs, 2, f, names)
    rep.compare(tag + "comultiplication is unital", "bialgebra axiom: Delta(1) = 1 (x) 1",
                es("i,iab->ab", u, d).reshape(1, -1), np.outer(u, u).reshape(1, -1), 1, f)
    rep.compare(tag + "counit is multiplicative", "bialgebra axiom: eps(xy) = eps(x)eps(y)",
                es("ijk,k->ij", m, e), np.outer(e, e), 2, f, names)
    rep.compare(tag + "counit is unital", "bialgebra axiom: eps(1) = 1",
                np.array([[u.dot(e)]], dtype=object), np.array([[f.one]], dtype=object), 1, f)


def _check_antipode(h: HopfData, rep: VerificationReport, tag: str = ""):
    f, m, d, s = h.field, h.mult, h.comult, h.antipode
    target = np.outer(h.counit, h.unit)
    left = es("ipq,rp,rqk->ik", d, s, m)
    right = es("ipq,rq,prk->ik", d, s, m)
    rep.compare(tag + "antipode left", "Hopf axiom: S(x1)x2 = eps(x)1", left, target, 1, f, [h.names])
    rep.compare(tag + "antipode right", "Hopf axiom: x1 S(x2) = eps(x)1", right, target, 1, f, [h.names])


def check_structure(h, level: str = "hopf", subject: str | None = None) -> VerificationReport:
    """Run all axioms up to ``level`` (algebra, coalgebra, bialgebra, hopf)."""
    if level not in _LEVELS:
        raise ValueError(f"unknown level {level!r}")
    rep = VerificationReport(subject or f"{level} structure")
    if isinstance(h, AlgebraData):
        if level != "algebra":
            raise StructureError("an AlgebraData can only be checked at level 'algebra'")
        _check_algebra(h, rep)
        return rep
    if isinstance(h, CoalgebraData):
        if level != "coalgebra":
            raise StructureError("a CoalgebraData can only be checked at level 'coalgebra'")
        _check_coalgebra(h, rep, [f"e{i}" for i in range(h.dim)])
        return rep
    if level in ("algebra", "bialgebra", "hopf"):
        _check_algebra(h.algebra, rep)
    if level in ("coalgebra", "bialgebra", "hopf"):
        _check_coalgebra(h.coalgebra, rep, h.names)
    if level in ("bialgebra", "hopf"):
        _check_bialgebra(h, rep)
    if level == "hopf":
        _check_antipode(h, rep)
    return rep


def check_hopf_morphism(theta: np.ndarray, src: HopfData, dst: HopfData,
                        subject: str = "Hopf morphism") -> VerificationReport:
    """Check that ``theta`` (dst.dim x src.dim) is a bialgebra map; flag bijectivity."""
    f = src.field
    rep = VerificationReport(subject)
    names = [src.names] * 2
    lhs = es("ijm,km->ijk", src.mult, theta)
    rhs = es("ai,bj,abk->ijk", theta, theta, dst.mult)
    rep.compare("multiplicative", "theta(xy) = theta(x)theta(y)", lhs, rhs, 2, f, names)
    rep.compare("unital", "theta(1) = 1", theta.dot(src.unit).reshape(1, -1),
                dst.unit.reshape(1, -1), 1, f)
    lhs = es("ipq,ap,bq->iab", src.comult, theta, theta)
    rhs = es("ki,kab->iab", theta, dst.comult)
    rep.compare("comultiplicative", "(theta (x) theta)Delta = Delta theta", lhs, rhs, 1, f, [src.names])
    rep.compare("counital", "eps theta = eps", dst.counit.dot(theta).reshape(-1, 1),
                src.counit.reshape(-1, 1), 1, f, [src.names])
    lhs = theta.dot(src.antipode)
    rhs = dst.antipode.dot(theta)
    rep.compare("commutes with antipode", "theta S = S theta", lhs.T, rhs.T, 1, f, [src.names])
    r = rank(theta)
    rep.fact("bijective", "isomorphism", r == src.dim == dst.dim,
             f"rank {r}", f"dims {src.dim} -> {dst.dim}")
    return rep


# --------------------------------------------------------------------------
# constructions

def dual_hopf(h: HopfData, names=None) -> HopfData:
    """The dual Hopf algebra on the dual basis ``p_i``.

    Product is convolution ``(fg)(x) = f(x1) g(x2)``; the coproduct is the
    transpose of the product, ``Delta(f)(x (x) y) = f(xy)``.
    """
    f = h.field
    mult = np.transpose(h.comult, (1, 2, 0)).copy()  # p_i p_j = sum_k Delta[k,i,j] p_k
    comult = np.transpose(h.mult, (2, 0, 1)).copy()  # Delta(p_k)[i,j] = mult[i,j,k]
    names = names or tuple(f"{n}*" for n in h.names)
    return HopfData(AlgebraData(f, mult, h.counit.copy(), names),
                    CoalgebraData(f, comult, h.unit.copy()),
                    h.antipode.T.copy())


def op_cop(h: HopfData) -> HopfData:
    """The Hopf algebra with opposite product and opposite coproduct."""
    return HopfData(AlgebraData(h.field, np.transpose(h.mult, (1, 0, 2)).copy(), h.unit, h.names),
                    CoalgebraData(h.field, np.transpose(h.comult, (0, 2, 1)).copy(), h.counit),
                    h.antipode)


def change_basis(h: HopfData, c: np.ndarray, names=()) -> HopfData:
    """Re-express ``h`` in the basis whose vectors are the columns of ``c``."""
    f = h.field
    ci = invert(c, f)
    if ci is None:
        raise StructureError("change of basis matrix is singular")
    mult = es("ai,bj,abk,lk->ijl", c, c, h.mult, ci)
    comult = es("ai,apq,jp,kq->ijk", c, h.comult, ci, ci)
    return HopfData(AlgebraData(f, mult, ci.dot(h.unit), tuple(names)),
                    CoalgebraData(f, comult, h.counit.dot(c)),
                    ci.dot(h.antipode).dot(c))


def convolution(fm: np.ndarray, gm: np.ndarray, c, a: AlgebraData) -> np.ndarray:
    """``(f*g)(x) = f(x1) g(x2)`` for maps C -> A given as (dim A x dim C) matrices."""
    n = c.comult.shape[0]
    if fm.shape != (a.dim, n) or gm.shape != (a.dim, n):
        raise StructureError("convolution operands must be dim A x dim C")
    return es("ipq,ap,bq,abk->ki", c.comult, fm, gm, a.mult)


def convolution_unit(c, a: AlgebraData) -> np.ndarray:
    return np.outer(a.unit, c.counit)


def antipode_inverse(h: HopfData) -> np.ndarray:
    inv = invert(h.antipode, h.field)
    if inv is None:
        raise AntipodeError("antipode is not invertible; constructions needing S^-1 are unavailable")
    assert np.array_equal(h.antipode.dot(inv), h.field.eye(h.dim))
    return inv


def solve_antipode(algebra: AlgebraData, coalgebra: CoalgebraData) -> np.ndarray:
    """Solve S(x1)x2 = eps(x)1 = x1 S(x2) for the antipode matrix."""
    f = algebra.field
    n = algebra.dim
    m, d = algebra.mult, coalgebra.comult
    # unknown S[r, p] flattened at r*n+p; equations indexed by (i, k) for each side
    left = es("ipq,rqk->ikrp", d, m).reshape(n * n, n * n)
    right = es("ipq,prk->ikrq", d, m).reshape(n * n, n * n)
    a = np.concatenate([left, right], axis=0)
    rhs_one = np.outer(coalgebra.counit, algebra.unit).reshape(-1)
    b = np.concatenate([rhs_one, rhs_one])
    x = solve(a, b, f)
    if x is None:
        raise AntipodeError("bialgebra has no antipode")
    if nullspace(a, f).shape[0]:
        raise AntipodeError("antipode equations are underdetermined")
    return x.reshape(n, n)


def tensor_algebra(a: AlgebraData, b: AlgebraData) -> AlgebraData:
    f = a.field
    na, nb = a.dim, b.dim
    mult = es("ikm,jln->ijklmn", a.mult, b.mult).reshape(na * nb, na * nb, na * nb)
    names = tuple(f"{x}(x){y}" for x in a.names for y in b.names)
    return AlgebraData(f, mult, np.kron(a.unit, b.unit), names)


def end_algebra(n: int, field: Field) -> AlgebraData:
    """End(k^n) on matrix units: E_ij sends e_j to e_i, index i*n+j."""
    if n < 1:
        raise ValueError("n must be positive")
    f = field
    mult = f.zeros((n * n, n * n, n * n))
    for i in range(n):
        for j in range(n):
            for l in range(n):
                mult[i * n + j, j * n + l, i * n + l] = f.one
    unit = f.eye(n).reshape(-1)
    names = tuple(f"E{i}{j}" for i in range(n) for j in range(n))
    return AlgebraData(f, mult, unit, names)


def opposite_algebra(a: AlgebraData) -> AlgebraData:
    return AlgebraData(a.field, np.transpose(a.mult, (1, 0, 2)).copy(), a.unit, a.names)
