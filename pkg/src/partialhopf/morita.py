"""The Morita context between the partial smash product and B (x) H.

Everything lives inside the twisted smash product T = B (x) H of the
enveloping algebra: Phi(a (x) h) = theta(a) (x) h, M = Phi(A (x) H) and N is
spanned by (h1 |> theta(a) <| S(h3)) (x) h2.  All module actions, sigma and
tau are multiplication in T re-expressed in the relevant span.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .envelope import EnvelopeData
from .hopf import antipode_inverse, es, iterated_coproduct
from .linalg import SpanCoordinates, rank, span_basis
from .report import VerificationReport
from .smash import BasedSubalgebra, build_twisted_smash, build_underline_smash


class MoritaError(ValueError):
    def __init__(self, message, report: VerificationReport):
        super().__init__(message)
        self.report = report


def phi_embedding_matrix(env: EnvelopeData) -> np.ndarray:
    """Phi: A (x) H -> B (x) H, a (x) h -> theta(a) (x) h."""
    return np.kron(env.theta, env.field.eye(env.bimodule.H.dim))


def check_phi_embedding(env: EnvelopeData, under: BasedSubalgebra, smash: BasedSubalgebra,
                        phi: np.ndarray | None = None) -> VerificationReport:
    """Phi restricted to the partial smash product is an injective algebra map."""
    f = env.field
    phi = phi_embedding_matrix(env) if phi is None else phi
    rep = VerificationReport("Phi embedding")
    img = under.inclusion.dot(phi.T)                    # Phi(s_i) rows in T coordinates
    lhs = es("ijk,kx->ijx", under.table, img)
    rhs = es("ix,jy,xyz->ijz", img, img, smash.table)
    names = [tuple(f"s{i}" for i in range(under.dim))] * 2
    rep.compare("Phi multiplicative", "Lemma 4.1: Phi(xy) = Phi(x)Phi(y)", lhs, rhs, 2, f, names)
    if under.unit is not None:
        u_img = under.unit.dot(img)
        t1 = np.kron(env.theta.dot(env.bimodule.A.unit), env.bimodule.H.unit)
        rep.compare("Phi of the unit", "Lemma 4.1 proof: Phi(1_A (x) 1_H) = theta(1_A) (x) 1_H",
                    u_img.reshape(1, -1), t1.reshape(1, -1), 1, f)
    r = rank(img) if img.size else 0
    rep.fact("Phi injective", "Lemma 4.1: Phi is a monomorphism", r == under.dim,
             f"rank {r}", f"dim {under.dim}")
    return rep


@dataclass(eq=False)
class MoritaData:
    envelope: EnvelopeData
    under: BasedSubalgebra            # partial smash product, ambient A (x) H
    smash: BasedSubalgebra            # B (x) H
    Phi: np.ndarray
    phi_image: np.ndarray             # rows Phi(s_i), T coordinates
    M_basis: np.ndarray
    N_basis: np.ndarray
    M_right: np.ndarray               # [m, t, m']
    N_left: np.ndarray                # [t, n, n']
    M_left: np.ndarray                # [x, m, m']  (x in the partial smash product)
    N_right: np.ndarray               # [n, x, n']
    sigma: np.ndarray                 # [n, m, t]
    tau: np.ndarray                   # [m, n, t], values in T coordinates
    report: VerificationReport

    @property
    def field(self):
        return self.envelope.field


def n_generators(env: EnvelopeData) -> np.ndarray:
    """(h1 |> theta(a) <| S(h3)) (x) h2 for basis h, a, in B (x) H coordinates."""
    H = env.bimodule.H
    d3 = iterated_coproduct(H, 3)
    x = es("ax,pxm,lmy,lr->pray", env.theta.T, env.left, env.right, H.antipode)
    return es("hpqr,pray->hayq", d3, x).reshape(-1, env.dim * H.dim)


def build_morita(env: EnvelopeData, under: BasedSubalgebra | None = None) -> MoritaData:
    f = env.field
    d = env.bimodule
    rep = VerificationReport(f"Morita context {d.name}".strip())
    antipode_inverse(d.H)
    g = env.global_bimodule()
    if g is None:
        rep.fact("B is an algebra", "Def 3.11(a)", False, "B not closed under convolution", "algebra")
        raise MoritaError("the enveloping algebra B is not closed under convolution", rep)
    under = under or build_underline_smash(d)
    smash = build_twisted_smash(g)
    phi = phi_embedding_matrix(env)
    emb = check_phi_embedding(env, under, smash, phi)
    rep.extend(emb)
    T = smash.table
    n = smash.dim
    img = under.inclusion.dot(phi.T)
    mb = span_basis(list(phi.T), n, f)
    nb = span_basis(list(n_generators(env)), n, f)
    msc, nsc, isc = SpanCoordinates(mb, f), SpanCoordinates(nb, f), SpanCoordinates(img, f)
    tb = f.eye(n)

    def table(left, right, sc, label, ref):
        prods = es("ix,jy,xyz->ijz", left, right, T)
        shape = prods.shape[:2]
        coords = sc.coords_many(prods.reshape(-1, n))
        bad = [k for k, c in enumerate(coords) if c is None]
        rep.fact(label, ref, not bad, "product outside span", "inside span",
                 list(np.unravel_index(bad[0], shape)) if bad else [])
        if bad:
            return None
        return np.array(coords, dtype=object).reshape(shape + (sc.dim,))

    m_right = table(mb, tb, msc, "M closed under B#H on the right", "Prop 4.2: M is a right B#H-module")
    n_left = table(tb, nb, nsc, "N closed under B#H on the left", "Prop 4.2: N is a left B#H-module")
    m_left = table(img, mb, msc, "M closed under the partial smash product", "Prop 4.3: M is a left module")
    n_right = table(nb, img, nsc, "N closed under the partial smash product", "Prop 4.3: N is a right module")
    sigma = table(nb, mb, SpanCoordinates(tb, f), "sigma lands in B#H", "sigma: N (x) M -> B#H")
    tau = es("ix,jy,xyz->ijz", mb, nb, T)             # in T coordinates
    tc = isc.coords_many(tau.reshape(-1, n))
    bad = [k for k, c in enumerate(tc) if c is None]
    rep.fact("tau lands in Phi(partial smash)", "tau: M (x) N -> Phi(partial smash)", not bad,
             "product outside Phi(partial smash)", "inside",
             list(np.unravel_index(bad[0], tau.shape[:2])) if bad else [])
    if any(t is None for t in (m_right, n_left, m_left, n_right)):
        bad = [c.name for c in rep.failures()]
        raise MoritaError(f"Morita module structures escape their spans: {', '.join(bad)}", rep)
    return MoritaData(env, under, smash, phi, img, mb, nb, m_right, n_left, m_left, n_right,
                      sigma, tau, rep)


def check_morita(m: MoritaData) -> VerificationReport:
    """Module axioms, balance, bimodule-morphism and mixed associativity identities."""
    f = m.field
    rep = VerificationReport(f"Morita identities {m.envelope.bimodule.name}".strip())
    rep.extend(m.report)
    T, S = m.smash.table, m.under.table
    Mr, Nl, Ml, Nr, sg, tu = m.M_right, m.N_left, m.M_left, m.N_right, m.sigma, m.tau
    # module axioms
    rep.compare("M right module", "Prop 4.2: (m t) t' = m (t t')",
                es("atb,bsc->atsc", Mr, Mr), es("tsu,auc->atsc", T, Mr), 3, f)
    rep.compare("N left module", "Prop 4.2: t (t' n) = (t t') n",
                es("sab,tbc->tsac", Nl, Nl), es("tsu,uac->tsac", T, Nl), 3, f)
    rep.compare("M left module", "Prop 4.3: x |> (y |> m) = (xy) |> m",
                es("yab,xbc->xyac", Ml, Ml), es("xyu,uac->xyac", S, Ml), 3, f)
    rep.compare("N right module", "Prop 4.3: (n <| x) <| y = n <| (xy)",
                es("axb,byc->axyc", Nr, Nr), es("xyu,auc->axyc", S, Nr), 3, f)
    if m.smash.unit is not None:
        rep.compare("M unital over B#H", "m 1 = m", es("t,atb->ab", m.smash.unit, Mr),
                    f.eye(Mr.shape[0]), 1, f)
        rep.compare("N unital over B#H", "1 n = n", es("t,tab->ab", m.smash.unit, Nl),
                    f.eye(Nl.shape[1]), 1, f)
    else:
        rep.skip("M unital over B#H", "m 1 = m", "B#H has no unit")
        rep.skip("N unital over B#H", "1 n = n", "B#H has no unit")
    rep.compare("unit acts on M", "Phi(1_A (x) 1_H) |> m = m", es("x,xab->ab", m.under.unit, Ml),
                f.eye(Ml.shape[1]), 1, f)
    rep.compare("unit acts on N", "n <| Phi(1_A (x) 1_H) = n", es("x,axb->ab", m.under.unit, Nr),
                f.eye(Nr.shape[0]), 1, f)
    # balance
    rep.compare("sigma balanced", "sigma(n <| x, m) = sigma(n, x |> m)",
                es("axb,bmt->axmt", Nr, sg), es("xmc,act->axmt", Ml, sg), 3, f)
    rep.compare("tau balanced", "tau(m t, n) = tau(m, t n)",
                es("atb,bnx->atnx", Mr, tu), es("tnc,acx->atnx", Nl, tu), 3, f)
    mb, nb, img = m.M_basis, m.N_basis, m.phi_image
    # bimodule morphisms
    rep.compare("sigma left linear", "sigma(t n, m) = t sigma(n, m)",
                es("tab,bmu->tamu", Nl, sg), es("amv,tvu->tamu", sg, T), 3, f)
    rep.compare("sigma right linear", "sigma(n, m t) = sigma(n, m) t",
                es("mtb,abu->amtu", Mr, sg), es("amv,vtu->amtu", sg, T), 3, f)
    rep.compare("tau left linear", "tau(x |> m, n) = x tau(m, n)",
                es("xab,bny->xany", Ml, tu), es("xu,anz,uzy->xany", img, tu, T), 3, f)
    rep.compare("tau right linear", "tau(m, n <| x) = tau(m, n) x",
                es("nxb,aby->anxy", Nr, tu), es("anz,xu,zuy->anxy", tu, img, T), 3, f)
    # mixed associativity, evaluated in T coordinates
    rep.compare("tau(m, n) |> m' = m sigma(n, m')", "Morita context associativity",
                es("anx,by,xyz->anbz", tu, mb, T), es("nbt,atc,cz->anbz", sg, Mr, mb), 3, f)
    rep.compare("sigma(n, m) n' = n <| tau(m, n')", "Morita context associativity",
                es("amt,tbc,cz->ambz", sg, Nl, nb), es("ax,mby,xyz->ambz", nb, tu, T), 3, f)
    # fullness, reported only
    rs = rank(sg.reshape(-1, sg.shape[2])) if sg.size else 0
    rt = rank(tu.reshape(-1, tu.shape[2])) if tu.size else 0
    rt_full = rank(np.concatenate([tu.reshape(-1, tu.shape[2]), img])) if tu.size else 0
    rep.notes.append(f"sigma image rank {rs} of dim B#H {m.smash.dim}"
                     f" ({'surjective' if rs == m.smash.dim else 'not surjective'})")
    onto = rt == m.under.dim == rt_full
    rep.notes.append(f"tau image rank {rt} against dim partial smash {m.under.dim}"
                     f" ({'surjective' if onto else 'not surjective onto Phi(partial smash)'})")
    rep.notes.append(f"dim M = {m.M_basis.shape[0]}, dim N = {m.N_basis.shape[0]}")
    return rep
