"""The ambient product on A (x) H, the partial twisted smash product and B (x) H.

For a partial bimodule algebra the ambient product is

    (a (x) h)(b (x) g) = a (h1 -> b <- S(h3)) (x) h2 g

on the lexicographic basis of A (x) H.  The partial smash product is the image
of right multiplication by 1_A (x) 1_H, stored as a :class:`BasedSubalgebra`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .actions import GlobalBimoduleData, PartialBimoduleData
from .field import Field
from .hopf import AlgebraData, check_structure, es, iterated_coproduct
from .linalg import SpanCoordinates, rank, span_basis
from .report import VerificationReport


class ClosureError(ValueError):
    """A product escaped the span it should stay in."""

    def __init__(self, message, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(eq=False)
class BasedSubalgebra:
    """A subalgebra of a based ambient algebra.

    ``inclusion`` rows are the basis in ambient coordinates; ``table`` is the
    product in internal coordinates; ``unit`` may be None for non-unital ones.
    """

    field: Field
    inclusion: np.ndarray
    table: np.ndarray
    unit: np.ndarray | None
    names: tuple = ()
    report: VerificationReport | None = None
    _coords: SpanCoordinates | None = dc_field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.inclusion.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.inclusion.shape[1]

    def algebra(self) -> AlgebraData:
        names = self.names or tuple(f"s{i}" for i in range(self.dim))
        return AlgebraData(self.field, self.table, self.unit, names)

    def span(self) -> SpanCoordinates:
        if self._coords is None:
            self._coords = SpanCoordinates(self.inclusion, self.field)
        return self._coords

    def to_ambient(self, coords):
        return np.asarray(coords, dtype=object).dot(self.inclusion)

    def coords(self, v):
        return self.span().coords(v)


def subalgebra_from_span(amb_mult: np.ndarray, basis: np.ndarray, field: Field,
                         unit_vec=None, subject: str = "subalgebra", names=()) -> BasedSubalgebra:
    """Restrict an ambient product to the row span ``basis``.

    Raises :class:`ClosureError` if some product of basis rows leaves the span.
    When ``unit_vec`` is given it is expressed internally and checked as a unit.
    """
    f = field
    basis = np.asarray(basis, dtype=object)
    k, n = basis.shape
    sc = SpanCoordinates(basis, f)
    prods = es("sa,tb,abc->stc", basis, basis, amb_mult).reshape(-1, n)
    coords = sc.coords_many(prods)
    rep = VerificationReport(subject)
    bad = [i for i, c in enumerate(coords) if c is None]
    if bad:
        s, t = divmod(bad[0], k)
        rep.fact("closure", "products of basis elements stay in the span", False,
                 "product outside span", "inside span", [s, t])
        raise ClosureError(f"{subject}: product of basis rows {s},{t} leaves the span", rep)
    rep.fact("closure", "products of basis elements stay in the span", True)
    table = np.array(coords, dtype=object).reshape(k, k, k)
    unit = None
    if unit_vec is not None:
        unit = sc.coords(unit_vec)
        if unit is None:
            rep.fact("unit in span", "the unit lies in the subalgebra", False,
                     "unit outside span", "inside span")
            raise ClosureError(f"{subject}: the unit is outside the span", rep)
    s = BasedSubalgebra(f, basis, table, unit, tuple(names), rep, sc)
    rep.extend(check_associativity(s))
    return s


def check_associativity(s: BasedSubalgebra) -> VerificationReport:
    """Exhaustive (xy)z = x(yz) on basis triples plus the unit laws."""
    rep = check_structure(s.algebra(), "algebra", "subalgebra table")
    return rep


# --------------------------------------------------------------------------
# ambient product and projection

@dataclass(eq=False)
class AmbientProductData:
    bimodule: PartialBimoduleData
    mult: np.ndarray  # (nA*nH)^3 product tensor

    @property
    def field(self):
        return self.bimodule.field

    @property
    def dim(self):
        return self.mult.shape[0]

    @property
    def unit(self):
        d = self.bimodule
        return np.kron(d.A.unit, d.H.unit)

    def multiply(self, z1, z2):
        return es("i,j,ijk->k", z1, z2, self.mult)

    def projection(self) -> np.ndarray:
        """Matrix P with rows P[z] = z (1_A (x) 1_H)."""
        return es("ijk,j->ik", self.mult, self.unit)

    def project(self, z):
        return self.multiply(z, self.unit)


def smash_tensor(H, A_mult, left, right) -> np.ndarray:
    """(a (x) h)(b (x) g) = a (h1 -> b <- S(h3)) (x) h2 g as a dense tensor."""
    nA, nH = A_mult.shape[0], H.dim
    d3 = iterated_coproduct(H, 3)
    x = es("pjk,lkm,lr->prjm", left, right, H.antipode)   # h_p -> b_j <- S(h_r)
    t = es("hpqr,prby,ayc,qgk->ahbgck", d3, x, A_mult, H.mult)
    return t.reshape(nA * nH, nA * nH, nA * nH)


def ambient_product(d: PartialBimoduleData) -> AmbientProductData:
    return AmbientProductData(d, smash_tensor(d.H, d.A.mult, d.left, d.right))


def ambient_multiply(amb: AmbientProductData, z1, z2):
    return amb.multiply(z1, z2)


def underline_project(amb: AmbientProductData, z):
    return amb.project(z)


def pair_names(a_names, h_names):
    return tuple(f"{a}#{h}" for a in a_names for h in h_names)


def build_underline_smash(d: PartialBimoduleData, amb: AmbientProductData | None = None) -> BasedSubalgebra:
    """The partial smash product (A (x) H)(1_A (x) 1_H) with its own product table."""
    amb = amb or ambient_product(d)
    f = d.field
    proj = amb.projection()
    basis = span_basis(list(proj), amb.dim, f)
    unit_vec = amb.project(amb.unit)
    s = subalgebra_from_span(amb.mult, basis, f, unit_vec,
                             f"partial smash product {d.name}".strip())
    rep = s.report
    rep.compare("projection is idempotent", "z(1 (x) 1)(1 (x) 1) = z(1 (x) 1)",
                proj.dot(proj), proj, 1, f, [pair_names(d.A.names, d.H.names)])
    return s


def build_twisted_smash(g: GlobalBimoduleData) -> BasedSubalgebra:
    """B (x) H with product b (h1 |> b' <| S(h3)) (x) h2 g on the full tensor space."""
    f = g.field
    H, B = g.H, g.B
    t = smash_tensor(H, B.mult, g.left, g.right)
    n = B.dim * H.dim
    unit = None if B.unit is None else np.kron(B.unit, H.unit)
    s = BasedSubalgebra(f, f.eye(n), t, unit, pair_names(B.names, H.names),
                        VerificationReport(f"twisted smash product {g.name}".strip()))
    s.report.extend(check_associativity(s))
    return s


def projection_rank(d: PartialBimoduleData) -> int:
    """Independent oracle for dim of the partial smash product: rank of the projection."""
    return rank(ambient_product(d).projection())
