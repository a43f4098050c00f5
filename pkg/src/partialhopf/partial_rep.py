"""Partial representations of H and the two canonical examples.

A partial representation is a linear map pi: H -> B with pi(1) = 1 and

    pi(S^-1(h2)) pi(h1) pi(k) = pi(S^-1(h2)) pi(h1 k).

Maps are matrices with column i = pi(h_i) in target coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .actions import PartialBimoduleData
from .hopf import AlgebraData, HopfData, antipode_inverse, end_algebra, es
from .report import VerificationReport
from .smash import BasedSubalgebra, ambient_product, build_underline_smash


class RepresentationError(ValueError):
    pass


@dataclass(eq=False)
class PartialRepData:
    H: HopfData
    target: AlgebraData
    pi: np.ndarray
    name: str = ""
    report: VerificationReport | None = None

    @property
    def field(self):
        return self.H.field


def _pair_labels(H):
    return [H.names, H.names]


def check_partial_rep(r: PartialRepData) -> VerificationReport:
    """Conditions (1) and (2) on every basis pair (h, k)."""
    H, B, pi = r.H, r.target, r.pi
    f = H.field
    rep = VerificationReport(f"partial representation {r.name}".strip())
    si = antipode_inverse(H)
    T = B.mult
    if B.unit is None:
        rep.skip("pi(1_H) = 1_B", "Def 5.2 (1)", "target has no unit")
    else:
        rep.compare("pi(1_H) = 1_B", "Def 5.2 (1)", pi.dot(H.unit).reshape(1, -1),
                    B.unit.reshape(1, -1), 1, f)
    pis = pi.dot(si)                                   # column q = pi(S^-1(h_q))
    x = es("hpq,xq,yp,xyz->hz", H.comult, pis, pi, T)  # pi(S^-1(h2)) pi(h1)
    lhs = es("hz,wk,zwu->hku", x, pi, T)
    rhs = es("hpq,xq,pkl,yl,xyu->hku", H.comult, pis, H.mult, pi, T)
    rep.compare("pi(S^-1(h2)) pi(h1) pi(k) = pi(S^-1(h2)) pi(h1 k)", "Def 5.2 (2)",
                lhs, rhs, 2, f, _pair_labels(H))
    return rep


def check_algebra_map(r: PartialRepData) -> VerificationReport:
    """Whether pi is an honest representation (multiplicative and unital)."""
    H, B, pi = r.H, r.target, r.pi
    rep = VerificationReport(f"algebra map {r.name}".strip())
    lhs = es("hkl,zl->hkz", H.mult, pi)
    rhs = es("xh,yk,xyz->hkz", pi, pi, B.mult)
    rep.compare("pi multiplicative", "pi(hk) = pi(h) pi(k)", lhs, rhs, 2, H.field, _pair_labels(H))
    return rep


def rep_into_end_A(d: PartialBimoduleData) -> PartialRepData:
    """pi(h)(a) = h1 -> a <- S(h2) as matrices in End(A)."""
    n = d.A.dim
    c = d.conjugation()                                # c[h, j, i]: coefficient of a_i in pi(h)(a_j)
    pi = np.transpose(c, (2, 1, 0)).reshape(n * n, d.H.dim)
    r = PartialRepData(d.H, end_algebra(n, d.field), pi, f"End(A) {d.name}".strip())
    r.report = check_partial_rep(r)
    return r


def rep_into_underline(d: PartialBimoduleData, s: BasedSubalgebra | None = None) -> PartialRepData:
    """pi(h) = (h1 -> 1 <- S(h3)) (x) h2 = (1 (x) h)(1 (x) 1) inside the partial smash product."""
    amb = ambient_product(d)
    s = s or build_underline_smash(d, amb)
    f = d.field
    gens = np.array([amb.project(np.kron(d.A.unit, d.H.e(i))) for i in range(d.H.dim)], dtype=object)
    coords = s.span().coords_many(gens)
    if any(c is None for c in coords):
        bad = next(i for i, c in enumerate(coords) if c is None)
        raise RepresentationError(f"pi({d.H.names[bad]}) lies outside the partial smash product")
    pi = np.array(coords, dtype=object).T.reshape(s.dim, d.H.dim)
    r = PartialRepData(d.H, s.algebra(), pi, f"partial smash {d.name}".strip())
    r.report = check_partial_rep(r)
    return r


def compose(r: PartialRepData, m: np.ndarray, target: AlgebraData, name: str = "") -> PartialRepData:
    """m o pi for a linear map m from r's target into ``target``."""
    out = PartialRepData(r.H, target, m.dot(r.pi), name or r.name)
    out.report = check_partial_rep(out)
    return out


def rep_through_morita(r: PartialRepData, morita) -> PartialRepData:
    """Push the partial smash representation into B (x) H along Phi."""
    m = morita.phi_image.T                            # Phi(s_i) as columns
    return compose(r, m, morita.smash.algebra(), f"B#H {r.name}")
