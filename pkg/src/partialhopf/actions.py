"""Partial left/right actions, partial bimodule algebras and their sources.

Action tensors are stored H-major:

* ``left[i, j, k]``: coefficient of ``a_k`` in ``h_i -> a_j`` (left partial action);
* ``right[i, j, k]``: coefficient of ``a_k`` in ``a_j <- h_i`` (right partial action).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .hopf import (AlgebraData, HopfData, StructureError, antipode_inverse, antipode_power,
                   change_basis, dual_hopf, es)
from .linalg import SpanCoordinates, rank
from .report import PASS, SKIPPED, Check, VerificationReport


class ActionError(ValueError):
    pass


@dataclass(eq=False)
class PartialBimoduleData:
    H: HopfData
    A: AlgebraData
    left: np.ndarray
    right: np.ndarray
    name: str = ""
    verified: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        shape = (self.H.dim, self.A.dim, self.A.dim)
        for label, t in (("left", self.left), ("right", self.right)):
            if t.shape != shape:
                raise StructureError(f"{label} action tensor has shape {t.shape}, expected {shape}")
        if self.H.field != self.A.field:
            raise StructureError("H and A live over different fields")

    @property
    def field(self):
        return self.H.field

    def act_left(self, h, a):
        return es("i,j,ijk->k", h, a, self.left)

    def act_right(self, a, h):
        return es("i,j,ijk->k", h, a, self.right)

    def sandwich(self) -> np.ndarray:
        """``X[p, r, j, :] = h_p -> a_j <- S(h_r)``."""
        return es("pjk,lkm,lr->prjm", self.left, self.right, self.H.antipode)

    def conjugation(self) -> np.ndarray:
        """``C[i, j, :] = h_i(1) -> a_j <- S(h_i(2))``."""
        return es("ipq,pqjm->ijm", self.H.comult, self.sandwich())


@dataclass(eq=False)
class GlobalBimoduleData:
    """A (possibly non-unital) algebra B with global left/right H-actions."""

    H: HopfData
    B: AlgebraData
    left: np.ndarray
    right: np.ndarray
    name: str = ""

    def __post_init__(self):
        shape = (self.H.dim, self.B.dim, self.B.dim)
        for label, t in (("left", self.left), ("right", self.right)):
            if t.shape != shape:
                raise StructureError(f"{label} action tensor has shape {t.shape}, expected {shape}")

    @property
    def field(self):
        return self.H.field

    def as_partial(self) -> PartialBimoduleData:
        if self.B.unit is None:
            raise ActionError("a non-unital algebra cannot carry a partial bimodule structure")
        return PartialBimoduleData(self.H, self.B, self.left, self.right, self.name)


@dataclass(eq=False)
class SkewPairData:
    A: HopfData
    H: HopfData
    sigma: np.ndarray  # sigma[i, j] = sigma(a_i, h_j)
    name: str = ""


def _labels(d):
    a = d.A if isinstance(d, PartialBimoduleData) else d.B
    return d.H.names, a.names


# --------------------------------------------------------------------------
# checks

def check_partial_bimodule(d: PartialBimoduleData, subject: str | None = None) -> VerificationReport:
    """The three left axioms, three right axioms and left/right compatibility."""
    f = d.field
    H, A, L, R = d.H, d.A, d.left, d.right
    mH, D, uH = H.mult, H.comult, H.unit
    mA, uA = A.mult, A.unit
    hn, an = _labels(d)
    n = A.dim
    rep = VerificationReport(subject or f"partial bimodule algebra {d.name}".strip())

    lhs = es("jkm,imn->ijkn", mA, L)
    rhs = es("ipq,pjx,qky,xyn->ijkn", D, L, L, mA)
    rep.compare("left multiplicativity", "Def 2.1: h -> (ab) = (h1 -> a)(h2 -> b)",
                lhs, rhs, 3, f, [hn, an, an])
    rep.compare("1_H acts as identity", "Def 2.1: 1_H -> a = a",
                es("i,ijk->jk", uH, L), f.eye(n), 1, f, [an])
    one_l = es("j,pjk->pk", uA, L)
    lhs = es("gjm,imn->igjn", L, L)
    rhs = es("ipq,px,qgs,sjy,xyn->igjn", D, one_l, mH, L, mA)
    rep.compare("left partial associativity", "Def 2.1: h -> (g -> a) = (h1 -> 1_A)(h2 g -> a)",
                lhs, rhs, 3, f, [hn, hn, an])

    lhs = es("jkm,imn->ijkn", mA, R)
    rhs = es("ipq,pjx,qky,xyn->ijkn", D, R, R, mA)
    rep.compare("right multiplicativity", "Def 3.1: (ab) <- h = (a <- h1)(b <- h2)",
                lhs, rhs, 3, f, [hn, an, an])
    rep.compare("1_H acts as identity on the right", "Def 3.1: a <- 1_H = a",
                es("i,ijk->jk", uH, R), f.eye(n), 1, f, [an])
    one_r = es("j,pjk->pk", uA, R)
    lhs = es("gjm,imn->igjn", R, R)
    rhs = es("ipq,px,gqs,sjy,xyn->igjn", D, one_r, mH, R, mA)
    rep.compare("right partial associativity", "Def 3.1: (a <- g) <- h = (1_A <- h1)(a <- g h2)",
                lhs, rhs, 3, f, [hn, hn, an])

    lhs = es("ijm,gmn->ijgn", L, R)
    rhs = es("gjm,imn->ijgn", R, L)
    rep.compare("left/right compatibility", "Def 3.2(ii): (h -> a) <- g = h -> (a <- g)",
                lhs, rhs, 3, f, [hn, an, hn])
    d.verified["partial_bimodule"] = rep.ok
    return rep


def check_global_bimodule(g: GlobalBimoduleData, subject: str | None = None) -> VerificationReport:
    """Global (multiplicative, unital, associative) module-algebra axioms on both sides."""
    f = g.field
    H, B, L, R = g.H, g.B, g.left, g.right
    mH, D, uH = H.mult, H.comult, H.unit
    mB = B.mult
    hn, bn = _labels(g)
    n = B.dim
    rep = VerificationReport(subject or f"global bimodule algebra {g.name}".strip())
    rep.compare("left multiplicativity", "Lemma 3.8: h |> (ab) = (h1 |> a)(h2 |> b)",
                es("jkm,imn->ijkn", mB, L), es("ipq,pjx,qky,xyn->ijkn", D, L, L, mB),
                3, f, [hn, bn, bn])
    rep.compare("1_H acts as identity", "Lemma 3.8: 1_H |> a = a",
                es("i,ijk->jk", uH, L), f.eye(n), 1, f, [bn])
    rep.compare("left associativity", "Lemma 3.8: g |> (h |> a) = (gh) |> a",
                es("hjm,gmn->ghjn", L, L), es("ghs,sjn->ghjn", mH, L), 3, f, [hn, hn, bn])
    rep.compare("right multiplicativity", "Lemma 3.8: (ab) <| h = (a <| h1)(b <| h2)",
                es("jkm,imn->ijkn", mB, R), es("ipq,pjx,qky,xyn->ijkn", D, R, R, mB),
                3, f, [hn, bn, bn])
    rep.compare("1_H acts as identity on the right", "Lemma 3.8: a <| 1_H = a",
                es("i,ijk->jk", uH, R), f.eye(n), 1, f, [bn])
    rep.compare("right associativity", "Lemma 3.8: (a <| g) <| h = a <| (gh)",
                es("gjm,hmn->ghjn", R, R), es("ghs,sjn->ghjn", mH, R), 3, f, [hn, hn, bn])
    rep.compare("left/right compatibility", "Lemma 3.8: (h |> a) <| g = h |> (a <| g)",
                es("ijm,gmn->ijgn", L, R), es("gjm,imn->ijgn", R, L), 3, f, [hn, bn, hn])
    if B.unit is not None:
        uB = B.unit
        rep.compare("unit is invariant", "module algebra: h |> 1 = eps(h) 1 = 1 <| h",
                    np.concatenate([es("j,ijk->ik", uB, L), es("j,ijk->ik", uB, R)], axis=1),
                    np.concatenate([np.outer(H.counit, uB)] * 2, axis=1), 1, f, [hn])
    else:
        rep.skip("unit is invariant", "module algebra: h |> 1 = eps(h) 1 = 1 <| h",
                 "algebra has no unit")
    return rep


def check_symmetry_assumption(d: PartialBimoduleData) -> VerificationReport:
    """(a <- S(h1)) (x) h2 = (a <- S(h2)) (x) h1 in A (x) H, for all basis a, h."""
    f = d.field
    H = d.H
    rs = es("lp,ljk->pjk", H.antipode, d.right)
    lhs = es("ipq,pjk->jikq", H.comult, rs)
    rhs = es("ipq,qjk->jikp", H.comult, rs)
    rep = VerificationReport(f"standing symmetry assumption {d.name}".strip())
    rep.compare("symmetry assumption",
                "Sec. 3 standing assumption: (a <- S(h1)) (x) h2 = (a <- S(h2)) (x) h1",
                lhs, rhs, 2, f, [d.A.names, H.names])
    d.verified["symmetry"] = rep.ok
    return rep


def check_action_morphism(theta: np.ndarray, src: PartialBimoduleData, dst: PartialBimoduleData,
                          require_equivalence: bool = False) -> VerificationReport:
    """Algebra map ``theta`` (dst.dim x src.dim) with theta(h -> a <- k) = h -> theta(a) <- k."""
    if src.H.dim != dst.H.dim:
        raise StructureError("morphism between bimodules over different Hopf algebras")
    f = src.field
    hn, an = src.H.names, src.A.names
    rep = VerificationReport("partial bimodule morphism")
    rep.compare("multiplicative", "Def 3.7: theta is an algebra morphism",
                es("ijm,km->ijk", src.A.mult, theta),
                es("ai,bj,abk->ijk", theta, theta, dst.A.mult), 2, f, [an, an])
    rep.compare("unital", "Def 3.7: theta(1_A) = 1_B", theta.dot(src.A.unit).reshape(1, -1),
                dst.A.unit.reshape(1, -1), 1, f)
    two_src = es("ijm,kmn->ijkn", src.left, src.right)   # h_i -> a_j <- h_k
    two_dst = es("ijm,kmn->ijkn", dst.left, dst.right)
    lhs = es("ijkn,xn->ijkx", two_src, theta)
    rhs = es("mj,imkx->ijkx", theta, two_dst)
    rep.compare("equivariant", "Def 3.7: theta(h -> a <- k) = h -> theta(a) <- k",
                lhs, rhs, 3, f, [hn, an, hn])
    r = rank(theta)
    bij = r == src.A.dim == dst.A.dim
    if require_equivalence:
        rep.fact("equivalence", "Def 3.7: theta is an isomorphism", bij,
                 f"rank {r}", f"dims {src.A.dim} -> {dst.A.dim}")
    else:
        rep.add(Check("equivalence", "Def 3.7: theta is an isomorphism", PASS if bij else SKIPPED,
                      detail=None if bij else "not bijective: morphism only"))
    return rep


def check_skew_pair(s: SkewPairData) -> VerificationReport:
    f = s.A.field
    A, H, sg = s.A, s.H, s.sigma
    an, hn = A.names, H.names
    rep = VerificationReport(f"skew pair {s.name}".strip())
    # (1) sigma(ab, h) = sigma(a, h1) sigma(b, h2)
    rep.compare("skew pair (1)", "Def 3.4(1): sigma(ab,h) = sigma(a,h1) sigma(b,h2)",
                es("abm,mh->abh", A.mult, sg), es("hpq,ap,bq->abh", H.comult, sg, sg),
                3, f, [an, an, hn])
    lhs = es("apq,ph,qg->ahg", A.comult, sg, sg)
    one_s = A.unit.dot(sg)
    rhs1 = es("gpq,p,qhm,am->ahg", H.comult, one_s, H.mult, sg)
    rhs2 = es("hpq,p,gqm,am->ahg", H.comult, one_s, H.mult, sg)
    rep.compare("skew pair (2a)", "Def 3.4(2): sigma(a1,h) sigma(a2,g) = sigma(1_A,g1) sigma(a,g2 h)",
                lhs, rhs1, 3, f, [an, hn, hn])
    rep.compare("skew pair (2b)", "Def 3.4(2): sigma(a1,h) sigma(a2,g) = sigma(1_A,h1) sigma(a,g h2)",
                lhs, rhs2, 3, f, [an, hn, hn])
    rep.compare("skew pair (3)", "Def 3.4(3): sigma(a,1) = eps(a)",
                sg.dot(H.unit).reshape(-1, 1), A.counit.reshape(-1, 1), 1, f, [an])
    return rep


# --------------------------------------------------------------------------
# constructions

def induced_partial_from_global(g: GlobalBimoduleData, ideal_basis: np.ndarray,
                                unit1A: np.ndarray, name: str = "") -> PartialBimoduleData:
    """Restrict global actions to an ideal A of B with unit 1_A.

    h -> a = 1_A (h |> a) and a <- h = (a <| h) 1_A, expressed in the coordinates
    of ``ideal_basis`` (rows, in B coordinates).
    """
    f = g.field
    B = g.B
    basis = np.asarray(ideal_basis, dtype=object)
    if basis.shape[0] == 0:
        raise ActionError("the zero ideal has no unit")
    sc = SpanCoordinates(basis, f)
    k = basis.shape[0]
    u = sc.coords(unit1A)
    if u is None:
        raise ActionError("1_A does not lie in the ideal")
    # B A and A B must stay in A
    left_prod = es("sb,tc,bcx->tsx", basis, f.eye(B.dim), B.mult).reshape(-1, B.dim)
    right_prod = es("sb,tc,cbx->tsx", basis, f.eye(B.dim), B.mult).reshape(-1, B.dim)
    for prods, side in ((left_prod, "A B"), (right_prod, "B A")):
        if any(c is None for c in sc.coords_many(prods)):
            raise ActionError(f"ideal_basis is not closed under {side} products with B")
    uu = B.mul(unit1A, unit1A)
    if not np.array_equal(uu, np.asarray(unit1A, dtype=object)):
        raise ActionError("1_A is not idempotent")
    lu = es("b,sc,bcx->sx", unit1A, basis, B.mult)
    ru = es("sb,c,bcx->sx", basis, unit1A, B.mult)
    if not (np.array_equal(lu, basis) and np.array_equal(ru, basis)):
        raise ActionError("1_A is not a unit for the ideal")
    prods = es("sb,tc,bcx->stx", basis, basis, B.mult).reshape(-1, B.dim)
    table = np.array(sc.coords_many(prods), dtype=object).reshape(k, k, k)
    names = tuple(f"a{i}" for i in range(k))
    A = AlgebraData(f, table, u, names)
    hl = es("sb,ibc->isc", basis, g.left)          # h_i |> a_s in B coords
    left_b = es("b,isc,bcx->isx", unit1A, hl, B.mult)
    hr = es("sb,ibc->isc", basis, g.right)
    right_b = es("isc,b,cbx->isx", hr, unit1A, B.mult)
    L = np.array(sc.coords_many(left_b.reshape(-1, B.dim)), dtype=object).reshape(g.H.dim, k, k)
    R = np.array(sc.coords_many(right_b.reshape(-1, B.dim)), dtype=object).reshape(g.H.dim, k, k)
    d = PartialBimoduleData(g.H, A, L, R, name or f"induced from {g.name}")
    rep = check_partial_bimodule(d)
    if not rep.ok:
        raise ActionError(f"induced action fails the partial axioms:\n{rep.summary()}")
    return d


def skew_pair_action(s: SkewPairData, name: str = "") -> PartialBimoduleData:
    """h -> b = b2 sigma(b1, h) and b <- h = b1 sigma(b2, (S^-1)^2 h)."""
    rep = check_skew_pair(s)
    if not rep.ok:
        bad = rep.failures()[0]
        raise ActionError(f"{bad.name} fails at basis triple {bad.counterexample.indices}")
    antipode_inverse(s.H)
    sinv2 = antipode_power(s.H, -1).dot(antipode_power(s.H, -1))  # (S^-1)^2, as written
    A, sg = s.A, s.sigma
    L = es("jpq,pi->ijq", A.comult, sg)
    sg2 = sg.dot(sinv2)                       # sigma(a, S^-2 h_i)
    R = es("jpq,qi->ijp", A.comult, sg2)
    d = PartialBimoduleData(s.H, A.algebra, L, R, name or f"skew pair action {s.name}".strip())
    check = check_partial_bimodule(d)
    if not check.ok:
        raise ActionError(f"skew pair action fails the partial axioms:\n{check.summary()}")
    return d


def coaction_to_action(H: HopfData, A: AlgebraData, rho_l: np.ndarray, rho_r: np.ndarray,
                       name: str = "", dual: HopfData | None = None) -> PartialBimoduleData:
    """Partial H*-bimodule algebra from partial H-coactions via the pairing.

    ``rho_r[j, k, i]`` is the coefficient of ``a_k (x) h_i`` in rho_r(a_j) and
    ``rho_l[j, i, k]`` the coefficient of ``h_i (x) a_k`` in rho_l(a_j).  The
    actions are f -> a = <f, a[1]> a[0] and a <- g = <g, a[-1]> a[0], on the dual
    basis of H.  Validity is not assumed; run :func:`check_partial_bimodule`.
    """
    n, m = H.dim, A.dim
    if rho_r.shape != (m, m, n) or rho_l.shape != (m, n, m):
        raise StructureError("coaction tensors do not match dim A and dim H")
    L = np.transpose(rho_r, (2, 0, 1)).copy()
    R = np.transpose(rho_l, (1, 0, 2)).copy()
    return PartialBimoduleData(dual or dual_hopf(H), A, L, R, name)


def rebase_acting(d: PartialBimoduleData, c: np.ndarray, names=()) -> PartialBimoduleData:
    """Change the basis of the acting Hopf algebra to the columns of ``c``."""
    H = change_basis(d.H, c, names)
    L = es("im,ijk->mjk", c, d.left)
    R = es("im,ijk->mjk", c, d.right)
    return PartialBimoduleData(H, d.A, L, R, d.name)


def trivial_global(H: HopfData, B: AlgebraData, name: str = "") -> GlobalBimoduleData:
    """h |> b = eps(h) b = b <| h."""
    f = H.field
    t = es("i,jk->ijk", H.counit, f.eye(B.dim))
    return GlobalBimoduleData(H, B, t, t.copy(), name or "trivial action")
