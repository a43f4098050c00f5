"""The enveloping action of a partial bimodule algebra.

Elements of Hom(H, A) are dim A x dim H matrices ``F`` (column ``i`` is
``F(h_i)``), flattened a-major so that Hom(H, A) shares coordinates with
A (x) H* .  The product is convolution and H acts by

    (h |> F)(k) = F(k h),    (F <| h)(k) = F(h k).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .actions import (ActionError, GlobalBimoduleData, PartialBimoduleData,
                      check_action_morphism, check_global_bimodule, induced_partial_from_global)
from .hopf import AlgebraData, check_structure, es
from .linalg import SpanCoordinates, rank, solve, span_basis
from .report import VerificationReport

HOM_ACTION_NOTE = ("right H-action on Hom(H,A) taken as (F <| h)(k) = F(hk), mirroring "
                   "(h |> F)(k) = F(kh)")


class EnvelopeError(ValueError):
    pass


def hom_convolution(H, A) -> np.ndarray:
    """Structure tensor of Hom(H, A) under convolution, flat index a * dim H + i."""
    nA, nH = A.dim, H.dim
    t = es("abc,ipq->apbqci", A.mult, H.comult)
    return t.reshape(nA * nH, nA * nH, nA * nH)


def hom_actions(H, nA: int):
    """Left and right H-action tensors on Hom(H, A), shape (nH, N, N) with N = nA nH."""
    f = H.field
    ia = f.eye(nA)
    left = es("its,ab->tasbi", H.mult, ia).reshape(H.dim, nA * H.dim, nA * H.dim)
    right = es("tis,ab->tasbi", H.mult, ia).reshape(H.dim, nA * H.dim, nA * H.dim)
    return left, right


def phi_matrix(d: PartialBimoduleData) -> np.ndarray:
    """Rows phi(a_j) in Hom(H, A) coordinates: phi(a)(h) = h1 -> a <- S(h2)."""
    c = d.conjugation()          # c[i, j, m]: phi(a_j)(h_i) has a_m-coefficient
    return np.transpose(c, (1, 2, 0)).reshape(d.A.dim, -1).copy()


def phi_map(d: PartialBimoduleData, a) -> np.ndarray:
    """phi(a) as a dim A x dim H matrix."""
    return np.asarray(a, dtype=object).dot(phi_matrix(d)).reshape(d.A.dim, d.H.dim)


@dataclass(eq=False)
class EnvelopeData:
    bimodule: PartialBimoduleData
    hom_mult: np.ndarray
    hom_left: np.ndarray
    hom_right: np.ndarray
    phi_rows: np.ndarray          # phi(a_j) in Hom coordinates
    B_basis: np.ndarray           # rows in Hom coordinates
    B_table: np.ndarray | None    # None when B is not closed under convolution
    B_unit: np.ndarray | None
    left: np.ndarray              # H-actions in B coordinates
    right: np.ndarray
    theta: np.ndarray             # dim B x dim A, column j = theta(a_j)
    iterations: int
    closure_report: VerificationReport

    @property
    def field(self):
        return self.bimodule.field

    @property
    def dim(self):
        return self.B_basis.shape[0]

    def algebra(self) -> AlgebraData | None:
        if self.B_table is None:
            return None
        names = tuple(f"b{i}" for i in range(self.dim))
        return AlgebraData(self.field, self.B_table, self.B_unit, names)

    def global_bimodule(self) -> GlobalBimoduleData | None:
        alg = self.algebra()
        if alg is None:
            return None
        return GlobalBimoduleData(self.bimodule.H, alg, self.left, self.right, "enveloping algebra")


def _find_unit(table: np.ndarray, f):
    k = table.shape[0]
    # u_i table[i, j, :] = e_j and table[j, i, :] u_i = e_j
    left = np.transpose(table, (1, 2, 0)).reshape(k * k, k)
    right = np.transpose(table, (0, 2, 1)).reshape(k * k, k)
    a = np.concatenate([left, right], axis=0)
    b = np.concatenate([f.eye(k).reshape(-1)] * 2)
    return solve(a, b, f)


def build_envelope(d: PartialBimoduleData, max_rounds: int | None = None) -> EnvelopeData:
    """B = closure of phi(A) under |> h and <| h, with the convolution table when closed."""
    f = d.field
    H, A = d.H, d.A
    conv = hom_convolution(H, A)
    hl, hr = hom_actions(H, A.dim)
    rows = phi_matrix(d)
    n = rows.shape[1]
    rep = VerificationReport(f"enveloping algebra {d.name}".strip())
    rep.notes.append(HOM_ACTION_NOTE)
    basis = span_basis(list(rows), n, f)
    bound = max_rounds or n + 1
    rounds = 0
    while True:
        rounds += 1
        grown = list(basis)
        grown += list(es("sx,txy->tsy", basis, hl).reshape(-1, n))
        grown += list(es("sx,txy->tsy", basis, hr).reshape(-1, n))
        new = span_basis(grown, n, f)
        if new.shape[0] == basis.shape[0]:
            break
        basis = new
        if rounds > bound:
            raise EnvelopeError("H-closure did not stabilise")
    sc = SpanCoordinates(basis, f)
    k = basis.shape[0]

    def coords(vs):
        out = sc.coords_many(vs)
        if any(c is None for c in out):
            return None
        return np.array(out, dtype=object).reshape(len(out), k)

    lt = coords(es("sx,txy->tsy", basis, hl).reshape(-1, n)).reshape(H.dim, k, k)
    rt = coords(es("sx,txy->tsy", basis, hr).reshape(-1, n)).reshape(H.dim, k, k)
    theta = coords(rows).T.copy()
    prods = coords(es("sa,tb,abc->stc", basis, basis, conv).reshape(-1, n))
    rep.fact("B closed under convolution", "Prop 3.13(i): B is a subalgebra of Hom(H,A)",
             prods is not None, "product outside B", "inside B")
    table = unit = None
    if prods is not None:
        table = prods.reshape(k, k, k)
        unit = _find_unit(table, f)
        if unit is None:
            rep.notes.append("B has no unit")
    return EnvelopeData(d, conv, hl, hr, rows, basis, table, unit, lt, rt, theta, rounds, rep)


# --------------------------------------------------------------------------
# identities for phi

def _two_sided(env: EnvelopeData) -> np.ndarray:
    """G[h, a, :] = h1 |> phi(a) <| S(h2) in Hom coordinates."""
    H = env.bimodule.H
    t = es("pxy,ryz,lr->plxz", env.hom_left, env.hom_right, H.antipode)  # h_p |> . <| S(h_l)
    return es("ipq,pqxz,ax->iaz", H.comult, t, env.phi_rows)


def check_phi_identities(env: EnvelopeData) -> VerificationReport:
    """phi multiplicative, injective, phi(a)(1) = a, and the b-twisted identities."""
    d = env.bimodule
    f = d.field
    H, A = d.H, d.A
    hn, an = H.names, A.names
    conv, rows = env.hom_mult, env.phi_rows
    rep = VerificationReport(f"phi identities {d.name}".strip())
    at_one = es("jmi,i->jm", rows.reshape(A.dim, A.dim, H.dim), H.unit)
    rep.compare("phi(a)(1_H) = a", "Lemma 3.12: phi(a)(1_H) = a", at_one, f.eye(A.dim), 1, f, [an])
    r = rank(rows)
    rep.fact("phi injective", "Lemma 3.12(i): phi is injective", r == A.dim, f"rank {r}", f"dim A {A.dim}")
    rep.compare("phi multiplicative", "Lemma 3.12(i): phi(ab) = phi(a) * phi(b)",
                es("abc,cx->abx", A.mult, rows), es("ax,by,xyz->abz", rows, rows, conv),
                2, f, [an, an])
    conj = d.conjugation()                             # h1 -> a <- S(h2)
    hphi = es("ax,ixy->iay", rows, env.hom_left)       # h |> phi(a)
    one_phi = A.unit.dot(rows)
    rep.compare("Lemma 3.12(ii)", "Lemma 3.12(ii): phi(1_A) * (h |> phi(a)) = phi(h1 -> a <- S(h2))",
                es("x,iay,xyz->iaz", one_phi, hphi, conv), es("iam,mz->iaz", conj, rows),
                2, f, [hn, an])
    rep.compare("Lemma 3.12(iii)", "Lemma 3.12(iii): phi(b) * (h |> phi(a)) = phi(b(h1 -> a <- S(h2)))",
                es("bx,iay,xyz->biaz", rows, hphi, conv),
                es("bmc,iam,cz->biaz", A.mult, conj, rows), 3, f, [an, hn, an])
    rep.notes.extend(literal_forms(env))
    return rep


def check_phi_literal_forms(env: EnvelopeData) -> VerificationReport:
    """Secondary readings: the statement with h1 |> phi(a) <| S(h2), and phi(h -> a) = phi(1_A) * (h |> phi(a))."""
    d = env.bimodule
    f = d.field
    H, A = d.H, d.A
    hn, an = H.names, A.names
    conv, rows = env.hom_mult, env.phi_rows
    rep = VerificationReport(f"phi identities, literal forms {d.name}".strip())
    g = _two_sided(env)
    conj = d.conjugation()
    one_phi = A.unit.dot(rows)
    rep.compare("Lemma 3.12(ii) statement form",
                "Lemma 3.12(ii): phi(1_A) * (h1 |> phi(a) <| S(h2)) = phi(h1 -> a <- S(h2))",
                es("x,iay,xyz->iaz", one_phi, g, conv), es("iam,mz->iaz", conj, rows), 2, f, [hn, an])
    rep.compare("Lemma 3.12(iii) statement form",
                "Lemma 3.12(iii): phi(b) * (h1 |> phi(a) <| S(h2)) = phi(b(h1 -> a <- S(h2)))",
                es("bx,iay,xyz->biaz", rows, g, conv),
                es("bmc,iam,cz->biaz", A.mult, conj, rows), 3, f, [an, hn, an])
    hphi = es("ax,ixy->iay", rows, env.hom_left)
    rep.compare("Lemma 3.12 one-sided form", "Lemma 3.12 proof: phi(h -> a) = phi(1_A) * (h |> phi(a))",
                es("x,iay,xyz->iaz", one_phi, hphi, conv), es("iam,mz->iaz", d.left, rows),
                2, f, [hn, an])
    return rep


def literal_forms(env: EnvelopeData) -> list[str]:
    out = []
    for c in check_phi_literal_forms(env).checks:
        line = f"secondary check {c.name!r}: {c.status}"
        if c.counterexample is not None:
            line += f" at {c.counterexample.labels or c.counterexample.indices}"
        out.append(line)
    return out


def _ideal_products(env: EnvelopeData):
    """Products b * phi(a) and phi(a) * b for basis b of B, as Hom vectors."""
    conv, rows, basis = env.hom_mult, env.phi_rows, env.B_basis
    lp = es("sx,ay,xyz->saz", basis, rows, conv).reshape(-1, conv.shape[0])
    rp = es("ax,sy,xyz->asz", rows, basis, conv).reshape(-1, conv.shape[0])
    return lp, rp


def check_right_ideal(env: EnvelopeData) -> VerificationReport:
    """phi(A) is a right ideal of B with unity phi(1_A)."""
    d = env.bimodule
    f = d.field
    rows = env.phi_rows
    sc = SpanCoordinates(rows, f)
    lp, rp = _ideal_products(env)
    rep = VerificationReport(f"phi(A) inside B {d.name}".strip())
    bad = [i for i, c in enumerate(sc.coords_many(rp)) if c is None]
    rep.fact("right ideal", "Prop 3.13(ii): phi(A) * B is inside phi(A)", not bad,
             "phi(a) * b outside phi(A)", "inside phi(A)", list(divmod(bad[0], env.dim)) if bad else [])
    one_phi = d.A.unit.dot(rows)
    rep.compare("phi(1_A) is a left unity", "Prop 3.13(ii): phi(1_A) * phi(a) = phi(a)",
                es("x,ay,xyz->az", one_phi, rows, env.hom_mult), rows, 1, f, [d.A.names])
    rep.compare("phi(1_A) is a right unity", "Prop 3.13(ii): phi(a) * phi(1_A) = phi(a)",
                es("ax,y,xyz->az", rows, one_phi, env.hom_mult), rows, 1, f, [d.A.names])
    return rep


def _ideal_verdicts(env: EnvelopeData):
    sc = SpanCoordinates(env.phi_rows, env.field)
    lp, rp = _ideal_products(env)
    lbad = [i for i, c in enumerate(sc.coords_many(lp)) if c is None]
    rbad = [i for i, c in enumerate(sc.coords_many(rp)) if c is None]
    return lbad, rbad


def check_envelope(env: EnvelopeData) -> VerificationReport:
    """Items (a)-(e) of the enveloping-action definition."""
    d = env.bimodule
    f = d.field
    A = d.A
    rep = VerificationReport(f"enveloping action {d.name}".strip())
    rep.notes.append(HOM_ACTION_NOTE)
    rep.extend(env.closure_report)
    # (a)
    g = env.global_bimodule()
    if g is None:
        rep.fact("(a) B is an H-bimodule algebra", "Def 3.11(a)", False,
                 "B not closed under convolution", "subalgebra")
    else:
        sub = check_global_bimodule(g)
        sub.extend(check_structure(g.B, "algebra"))
        ok = all(c.status != "fail" for c in sub.checks)
        first = sub.failures()[0] if not ok else None
        rep.fact("(a) B is an H-bimodule algebra", "Def 3.11(a)", ok,
                 first.name if first else "", "", first.counterexample.indices if first and first.counterexample else [],
                 detail=None if env.B_unit is not None else "B has no unit; unitality not required")
        rep.extend(sub, "(a) ")
    # (b)
    r = rank(env.theta)
    mult_ok = True
    if env.B_table is not None:
        lhs = es("abc,xc->abx", A.mult, env.theta)
        rhs = es("xa,yb,xyz->abz", env.theta, env.theta, env.B_table)
        mult_ok = np.array_equal(lhs, rhs)
    else:
        lhs = es("abc,cx->abx", A.mult, env.phi_rows)
        rhs = es("ax,by,xyz->abz", env.phi_rows, env.phi_rows, env.hom_mult)
        mult_ok = np.array_equal(lhs, rhs)
    rep.fact("(b) theta is a monomorphism", "Def 3.11(b)", mult_ok and r == A.dim,
             f"rank {r}, multiplicative {mult_ok}", f"rank {A.dim}, multiplicative True")
    # (c)
    lbad, rbad = _ideal_verdicts(env)
    rep.fact("(c) left ideal", "Def 3.11(c): B * theta(A) inside theta(A)", not lbad,
             "b * theta(a) outside theta(A)", "inside", list(divmod(lbad[0], A.dim)) if lbad else [])
    rep.fact("(c) right ideal", "Def 3.11(c): theta(A) * B inside theta(A)", not rbad,
             "theta(a) * b outside theta(A)", "inside", list(divmod(rbad[0], env.dim)) if rbad else [])
    # (d)
    if g is None:
        rep.fact("(d) equivalent to the induced action", "Def 3.11(d)", False,
                 "B is not an algebra", "induced action")
    else:
        try:
            ind = induced_partial_from_global(g, env.theta.T, env.theta.dot(A.unit), "induced on theta(A)")
        except ActionError as exc:
            rep.fact("(d) equivalent to the induced action", "Def 3.11(d)", False, str(exc).splitlines()[0],
                     "induced partial action")
        else:
            mor = check_action_morphism(f.eye(A.dim), d, ind, require_equivalence=True)
            first = mor.failures()[0] if not mor.ok else None
            rep.fact("(d) equivalent to the induced action", "Def 3.11(d)", mor.ok,
                     first.name if first else "", "", first.counterexample.indices if first else [])
            rep.extend(mor, "(d) ")
    # (e)
    two = es("ja,iab,kbc->ikjc", env.theta.T, env.left, env.right).reshape(-1, env.dim)
    ra = rank(two) if two.size else 0
    rep.fact("(e) admissible", "Def 3.10: B is spanned by h |> theta(A) <| k", ra == env.dim,
             f"span rank {ra}", f"dim B {env.dim}")
    return rep


def ideal_criterion(env: EnvelopeData) -> VerificationReport:
    """The displayed identity, the central-idempotent form, and the direct ideal test."""
    d = env.bimodule
    f = d.field
    H, A = d.H, d.A
    hn, an = H.names, A.names
    rep = VerificationReport(f"ideal criterion {d.name}".strip())
    x = d.sandwich()                                  # x[p, r, j] = h_p -> a_j <- S(h_r)
    # lhs(k, h, a) = k1 -> (h -> a) <- S(k2)
    lhs = es("kpr,prmz,ham->khaz", H.comult, x, d.left)
    # rhs = [k1 h1 -> a <- S(k2 h2)][k3 -> 1 <- S(k4)]
    d4 = es("kpq,quv,vrs->kpurs", H.comult, H.comult, H.comult)   # k1 k2 k3 k4
    hh = H.comult
    prod1 = es("pxu,rbv,hxb->hpruv", H.mult, H.mult, hh)          # (p x)(r b) for h -> x (x) b
    first = es("hpruv,uvaz->hpraz", prod1, x)                     # (k_p h1 -> a <- S(k_r h2))
    one = es("j,uvjm->uvm", A.unit, x)                            # k_u -> 1 <- S(k_v)
    rhs = es("kprst,hpraz,stm,zmy->khay", d4, first, one, A.mult)
    c1 = rep.compare("displayed identity", "Prop 3.15: k1 -> (h -> a) <- S(k2) = "
                     "[k1 h1 -> a <- S(k2 h2)][k3 -> 1_A <- S(k4)]", lhs, rhs, 3, f, [hn, hn, an])
    # central idempotent form, inside Hom(H, A) against B's basis
    conv = env.hom_mult
    one_phi = A.unit.dot(env.phi_rows)
    idem = np.array_equal(es("x,y,xyz->z", one_phi, one_phi, conv), one_phi)
    lcomm = es("x,sy,xyz->sz", one_phi, env.B_basis, conv)
    rcomm = es("sx,y,xyz->sz", env.B_basis, one_phi, conv)
    rep.compare("phi(1_A) central in B", "Prop 3.15 proof: phi(1_A) is central in B",
                lcomm, rcomm, 1, f)
    rep.fact("phi(1_A) idempotent", "Prop 3.15 proof: phi(1_A) is idempotent", idem, "e*e != e", "e")
    lbad, rbad = _ideal_verdicts(env)
    ideal = not lbad and not rbad
    rep.fact("phi(A) is an ideal of B", "Prop 3.15: phi(A) is an ideal of B", ideal,
             "containment fails", "two-sided ideal")
    agree = (c1.status == "pass") == ideal
    rep.fact("criterion agrees with ideal test", "Prop 3.15: if and only if", agree,
             f"identity {c1.status}, ideal {ideal}", "equal verdicts")
    # the same identity with h -> a replaced by h1 -> a <- S(h2), which is what
    # phi(1_A) * (h |> phi(a)) actually computes
    lhs2 = es("kpr,prmz,iam->kiaz", H.comult, x, d.conjugation())
    c2 = VerificationReport("").compare("conjugated identity", "", lhs2, rhs, 3, f, [hn, hn, an])
    line = f"secondary check 'conjugated identity': {c2.status}"
    if c2.counterexample is not None:
        line += f" at {c2.counterexample.labels}"
    rep.notes.append(line + f"; agrees with ideal test: {(c2.status == 'pass') == ideal}")
    return rep
