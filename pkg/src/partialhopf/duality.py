"""Duality: H#H*, its matrix realisations, and the embedding of the partial smash product.

Conventions.  H* = dual_hopf(H) on the dual basis p_i of the basis b_i of H.

* f -> h = h1 f(h2) and h <- f = f(h1) h2;
* (h#f)(k#g) = h (f1 -> k) # f2 * g on H (x) H*;
* lambda(h#f)(k) = h (f -> k);
* phi(f#h)(k) = (k <- f) h on H* (x) H, whose product is
  (f#h)(g#l) = (g * (l1 |> f)) # l2 h with (l |> f)(x) = f(x l), the order
  that makes phi multiplicative for composition of endomorphisms.

The carrier A (x) H (x) H* has product
(a (x) h#f)(b (x) k#g) = a (h1 -> b <- S(h3)) (x) h2 (f1 -> k) # f2 * g.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .actions import PartialBimoduleData
from .hopf import (AlgebraData, HopfData, antipode_inverse, check_structure, dual_hopf,
                   end_algebra, es, iterated_coproduct, tensor_algebra)
from .linalg import SpanCoordinates, rank, span_basis
from .report import VerificationReport
from .smash import BasedSubalgebra, ambient_product, build_underline_smash

E_READING = "the unit in the idempotent formula is read as 1_H (the argument of phi lies in H*#H)"


class DualityError(ValueError):
    pass


def dual_actions(H: HopfData):
    """left[f, h, :] = f -> h and right[f, h, :] = h <- f."""
    d = H.comult
    left = np.transpose(d, (2, 0, 1)).copy()           # left[j, i, p] = Delta[i, p, j]
    right = np.transpose(d, (1, 0, 2)).copy()          # right[j, i, q] = Delta[i, j, q]
    return left, right


def check_dual_actions(H: HopfData, Hs: HopfData | None = None) -> VerificationReport:
    """H is a left and a right H*-module algebra under -> and <-."""
    Hs = Hs or dual_hopf(H)
    f = H.field
    left, right = dual_actions(H)
    rep = VerificationReport("H*-actions on H")
    n = H.dim
    lab = [Hs.names, Hs.names, H.names]
    rep.compare("eps -> h = h", "unit of H* acts trivially", es("f,fhk->hk", Hs.unit, left), f.eye(n), 1, f)
    rep.compare("h <- eps = h", "unit of H* acts trivially", es("f,fhk->hk", Hs.unit, right), f.eye(n), 1, f)
    rep.compare("f -> (g -> h) = (f*g) -> h", "left module",
                es("ghx,fxy->fghy", left, left), es("fgu,uhy->fghy", Hs.mult, left), 3, f, lab)
    rep.compare("(h <- f) <- g = h <- (f*g)", "right module",
                es("fhx,gxy->fghy", right, right), es("fgu,uhy->fghy", Hs.mult, right), 3, f, lab)
    lab2 = [Hs.names, H.names, H.names]
    for side, t in (("->", left), ("<-", right)):
        rep.compare(f"f {side} (hk) = (f1 {side} h)(f2 {side} k)", "module algebra",
                    es("hkl,flz->fhkz", H.mult, t),
                    es("fab,ahx,bky,xyz->fhkz", Hs.comult, t, t, H.mult), 3, f, lab2)
        rep.compare(f"f {side} 1 = f(1) 1", "module algebra",
                    es("h,fhk->fk", H.unit, t), np.outer(Hs.counit, H.unit), 1, f)
    return rep


def _full_based(table, unit, field, names, subject) -> BasedSubalgebra:
    n = table.shape[0]
    s = BasedSubalgebra(field, field.eye(n), table, unit, tuple(names), VerificationReport(subject))
    s.report.extend(check_structure(s.algebra(), "algebra", subject))
    return s


def h_smash_hstar_table(H: HopfData, Hs: HopfData) -> np.ndarray:
    n = H.dim
    left, _ = dual_actions(H)
    t = es("jac,akx,ixy,clz->ijklyz", Hs.comult, left, H.mult, Hs.mult)
    return t.reshape(n * n, n * n, n * n)


def build_H_smash_Hstar(H: HopfData, Hs: HopfData | None = None) -> BasedSubalgebra:
    """H#H* on b_i # p_j (index i*n + j), unit 1_H # eps."""
    Hs = Hs or dual_hopf(H)
    names = [f"{h}#{p}" for h in H.names for p in Hs.names]
    return _full_based(h_smash_hstar_table(H, Hs), np.kron(H.unit, Hs.unit), H.field, names, "H#H*")


def hstar_smash_h_table(H: HopfData, Hs: HopfData) -> np.ndarray:
    n = H.dim
    # (p_f # b_h)(p_g # b_l) = sum p_g * (b_l1 |> p_f) # b_l2 b_h, (b_l |> p_f) = sum_x mult[x, l, f] p_x
    t = es("lab,xaf,gxz,bhw->fhglzw", H.comult, H.mult, Hs.mult, H.mult)
    return t.reshape(n * n, n * n, n * n)


def build_Hstar_smash_H(H: HopfData, Hs: HopfData | None = None) -> BasedSubalgebra:
    Hs = Hs or dual_hopf(H)
    names = [f"{p}#{h}" for p in Hs.names for h in H.names]
    return _full_based(hstar_smash_h_table(H, Hs), np.kron(Hs.unit, H.unit), H.field, names, "H*#H")


def lambda_matrix(H: HopfData) -> np.ndarray:
    """Columns h#f, rows End(H) matrix units: lambda(h#f)(k) = h (f -> k)."""
    n = H.dim
    left, _ = dual_actions(H)
    return es("fkx,hxy->ykhf", left, H.mult).reshape(n * n, n * n)


def phi_iso_matrix(H: HopfData) -> np.ndarray:
    """Columns f#h: phi(f#h)(k) = (k <- f) h = f(k1) k2 h."""
    n = H.dim
    return es("kfq,qhy->ykfh", H.comult, H.mult).reshape(n * n, n * n)


def check_iso(mat: np.ndarray, src: BasedSubalgebra, dst: AlgebraData, label: str, ref: str) -> VerificationReport:
    f = dst.field
    rep = VerificationReport(label)
    lhs = es("ijk,zk->ijz", src.table, mat)
    rhs = es("xi,yj,xyz->ijz", mat, mat, dst.mult)
    rep.compare(f"{label} multiplicative", ref, lhs, rhs, 2, f, [src.names, src.names])
    rep.compare(f"{label} unital", ref, mat.dot(src.unit).reshape(1, -1), dst.unit.reshape(1, -1), 1, f)
    r = rank(mat)
    n = dst.dim
    rep.fact(f"{label} bijective", ref, r == n == src.dim, f"rank {r}", f"rank {n}")
    return rep


def lambda_phi_isos(H: HopfData):
    """(lambda, phi, report); lambda: H#H* -> End(H), phi: H*#H -> End(H)."""
    Hs = dual_hopf(H)
    end = end_algebra(H.dim, H.field)
    lam, ph = lambda_matrix(H), phi_iso_matrix(H)
    rep = VerificationReport("matrix realisations of the smash products")
    rep.extend(check_iso(lam, build_H_smash_Hstar(H, Hs), end, "lambda", "Lemma 6.1 (1)"))
    rep.extend(check_iso(ph, build_Hstar_smash_H(H, Hs), end, "phi", "Lemma 6.1 (2)"))
    return lam, ph, rep


# --------------------------------------------------------------------------
# coaction and H*-action on the partial smash product

def comodule_and_module_structures(d: PartialBimoduleData, s: BasedSubalgebra | None = None) -> VerificationReport:
    """rho = id (x) Delta and f . (a (x) h) = a (x) (f -> h), restricted to the partial smash product."""
    H, A = d.H, d.A
    f = d.field
    Hs = dual_hopf(H)
    nA, n = A.dim, H.dim
    amb = ambient_product(d)
    s = s or build_underline_smash(d, amb)
    rep = VerificationReport(f"comodule and module structures {d.name}".strip())
    inc, sc, k = s.inclusion, s.span(), s.dim
    # rho on the ambient space: (a, h) -> (a, h1, h2)
    rho_amb = es("ab,hpq->ahbpq", f.eye(nA), H.comult).reshape(nA * n, nA * n, n)
    img = es("sz,zwq->sqw", inc, rho_amb).reshape(k * n, nA * n)   # [s, q] rows
    coords = sc.coords_many(img)
    ok = all(c is not None for c in coords)
    rep.fact("rho lands in partial smash (x) H", "comodule structure", ok,
             "image outside", "inside")
    if not ok:
        raise DualityError("the coaction leaves the partial smash product")
    rho = np.array(coords, dtype=object).reshape(k, n, k)          # rho[s, q, t]: t (x) h_q
    rho = np.transpose(rho, (0, 2, 1))                            # rho[s, t, q]
    lab = [s.names or tuple(f"s{i}" for i in range(k))]
    rep.compare("(rho (x) id) rho = (id (x) Delta) rho", "coassociative coaction",
                es("stq,tur->surq", rho, rho), es("suq,qrp->surp", rho, H.comult), 1, f, lab)
    rep.compare("(id (x) eps) rho = id", "counital coaction",
                es("stq,q->st", rho, H.counit), f.eye(k), 1, f, lab)
    tens = es("stu,pqr->sptqur", s.table, H.mult).reshape(k * n, k * n, k * n)
    rf = rho.reshape(k, k * n)
    rep.compare("rho(xy) = rho(x) rho(y)", "comodule algebra",
                es("xyz,zw->xyw", s.table, rf), es("xa,yb,abw->xyw", rf, rf, tens), 2, f, lab * 2)
    if s.unit is not None:
        rep.compare("rho(1) = 1 (x) 1", "comodule algebra", s.unit.dot(rf).reshape(1, -1),
                    np.kron(s.unit, H.unit).reshape(1, -1), 1, f)
    # displayed coaction on typical elements (a (x) h)1 = a (h1 -> 1 <- S(h3)) (x) h2
    x = es("pjk,lkm,lr->prjm", d.left, d.right, H.antipode)
    one = es("j,prjm->prm", A.unit, x)
    d4 = iterated_coproduct(H, 4)
    shown = es("hpqrs,pqm,amy->ahyrs", d4, one, A.mult)
    direct = es("hpqrs,psm,amy->ahyqr", d4, one, A.mult)     # (id (x) Delta)((a (x) h)1)
    rep.compare("displayed coaction formula", "rho((a (x) h)1) = a(h1 -> 1 <- S(h2)) (x) h3 (x) h4",
                shown.reshape(nA * n, -1), direct.reshape(nA * n, -1), 1, f)
    # H*-action
    left, _ = dual_actions(H)
    act_amb = es("ab,fhk->fahbk", f.eye(nA), left).reshape(n, nA * n, nA * n)
    acted = es("sz,fzw->fsw", inc, act_amb).reshape(n * k, nA * n)
    ac = sc.coords_many(acted)
    ok = all(c is not None for c in ac)
    rep.fact("H* action preserves partial smash", "H*-module structure", ok, "image outside", "inside")
    if not ok:
        raise DualityError("the H*-action leaves the partial smash product")
    act = np.array(ac, dtype=object).reshape(n, k, k)              # act[f, s, t]
    lf = [Hs.names, lab[0]]
    rep.compare("eps . z = z", "H*-module", es("f,fst->st", Hs.unit, act), f.eye(k), 1, f, lab)
    rep.compare("f . (g . z) = (f*g) . z", "H*-module",
                es("gsx,fxt->fgst", act, act), es("fgu,ust->fgst", Hs.mult, act), 3, f)
    rep.compare("f . (zw) = (f1 . z)(f2 . w)", "H* module algebra",
                es("zwu,fut->fzwt", s.table, act),
                es("fab,azx,bwy,xyt->fzwt", Hs.comult, act, act, s.table), 3, f)
    if s.unit is not None:
        rep.compare("f . 1 = f(1) 1", "H* module algebra", es("s,fst->ft", s.unit, act),
                    np.outer(Hs.counit, s.unit), 1, f, [Hs.names])
    # displayed action: f . ((a (x) h)1) = (a (x) (f -> h))1
    proj = amb.projection()
    lhs = es("zw,fwv->fzv", proj, act_amb)
    rhs = es("fzw,wv->fzv", act_amb, proj)
    rep.compare("displayed H*-action formula", "f . ((a (x) h)1) = (a # (f -> h))1", lhs, rhs, 2, f,
                [Hs.names, tuple(f"{a}#{h}" for a in A.names for h in H.names)])
    return rep


# --------------------------------------------------------------------------
# the maps into A (x) End(H)

@dataclass(eq=False)
class DualityData:
    bimodule: PartialBimoduleData
    H: HopfData
    Hstar: HopfData
    HsmashHstar: BasedSubalgebra
    lam: np.ndarray
    phi_iso: np.ndarray
    AEndH: AlgebraData
    phiA: np.ndarray
    psi: np.ndarray
    carrier: BasedSubalgebra           # A (x) H#H*
    restriction: np.ndarray            # rows: basis of partial smash # H* in carrier coordinates
    PhiMap: np.ndarray
    e_coords: np.ndarray
    under: BasedSubalgebra
    iso_report: VerificationReport

    @property
    def field(self):
        return self.H.field


def carrier_table(d: PartialBimoduleData, Hs: HopfData) -> np.ndarray:
    H, A = d.H, d.A
    n, nA = H.dim, A.dim
    left, _ = dual_actions(H)
    x = d.sandwich()                                    # x[p, r, b, y] = h_p -> b_y <- S(h_r)
    d3 = iterated_coproduct(H, 3)
    ab = es("hpqr,prby,ayc->ahbqc", d3, x, A.mult)      # a (h1 -> b <- S(h3)), h2 kept
    hf = es("fuv,ukx,qxw,vgz->qfkgwz", Hs.comult, left, H.mult, Hs.mult)
    t = es("ahbqc,qfkgwz->ahfbkgcwz", ab, hf)
    m = nA * n * n
    return t.reshape(m, m, m)


def build_duality_maps(d: PartialBimoduleData, s: BasedSubalgebra | None = None) -> DualityData:
    H, A = d.H, d.A
    f = d.field
    n, nA = H.dim, A.dim
    Hs = dual_hopf(H)
    si = antipode_inverse(H)
    s = s or build_underline_smash(d)
    lam, ph, iso_rep = lambda_phi_isos(H)
    hsh = build_H_smash_Hstar(H, Hs)
    end = end_algebra(n, f)
    aend = tensor_algebra(A, end)
    # S*^-1(p_i) = sum_j Sinv[i, j] p_j; phi(S*^-1(p_i) # 1_H)
    ph3 = ph.reshape(n * n, n, n)
    e_i = es("ij,zju,u->iz", si, ph3, H.unit)
    conj = d.conjugation()                              # conj[i, a, a']
    phiA = es("iab,iz->bza", conj, e_i).reshape(nA * n * n, nA)
    psi = np.kron(A.unit.reshape(-1, 1), lam)
    PhiMap = es("ra,sx,rsz->zax", phiA, psi, aend.mult).reshape(nA * n * n, nA * n * n)
    table = carrier_table(d, Hs)
    names = [f"{a}(x){h}#{p}" for a in A.names for h in H.names for p in Hs.names]
    # 1 (x) 1#eps is only a left unit once the action is partial
    carrier = BasedSubalgebra(f, f.eye(table.shape[0]), table, None, tuple(names),
                              VerificationReport("A (x) H#H*"))
    restriction = np.kron(s.inclusion, f.eye(n))
    u = np.kron(s.to_ambient(s.unit), Hs.unit)
    e = PhiMap.dot(u)
    return DualityData(d, H, Hs, hsh, lam, ph, aend, phiA, psi, carrier, restriction, PhiMap, e, s, iso_rep)


def corner_basis(dd: DualityData) -> np.ndarray:
    """Basis of e (A (x) End(H)) e."""
    T = dd.AEndH.mult
    m = T.shape[0]
    e = dd.e_coords
    ex = es("x,xiy->iy", e, T)                          # e * b_i
    exe = es("iy,z,yzw->iw", ex, e, T)                  # (e b_i) e
    return span_basis(list(exe), m, dd.field)


def check_duality(dd: DualityData) -> VerificationReport:
    f = dd.field
    d = dd.bimodule
    H, A = dd.H, d.A
    n, nA = H.dim, A.dim
    rep = VerificationReport(f"duality {d.name}".strip())
    rep.notes.append(E_READING)
    rep.extend(dd.iso_report)
    T = dd.AEndH.mult
    phiA, psi, Phi = dd.phiA, dd.psi, dd.PhiMap
    # (i)
    rep.compare("phi_A homomorphism", "phi(ab) = phi(a) phi(b)",
                es("abc,zc->abz", A.mult, phiA), es("xa,yb,xyz->abz", phiA, phiA, T), 2, f, [A.names, A.names])
    rep.compare("e = phi_A(1_A)", "idempotent formula", dd.e_coords.reshape(1, -1),
                phiA.dot(A.unit).reshape(1, -1), 1, f)
    hs = dd.HsmashHstar
    rep.compare("psi homomorphism", "psi(h#f) = 1 (x) lambda(h#f)",
                es("ijk,zk->ijz", hs.table, psi), es("xi,yj,xyz->ijz", psi, psi, T), 2, f,
                [hs.names, hs.names])
    # (ii)
    p1 = phiA.dot(A.unit)
    left1 = es("x,yq,xyu->qu", p1, psi, T)              # phi(1) psi(h#f)
    lhs = es("qu,va,uvw->qaw", left1, phiA, T)
    x = d.sandwich()
    d3 = iterated_coproduct(H, 3)
    conj = es("hpqr,prab->hqab", d3, x)                 # h1 -> a <- S(h3), h2 kept
    psi3 = psi.reshape(-1, n, n)                        # psi[z, h, f]
    rhs = es("hqab,ub,vqf,uvw->hfaw", conj, phiA, psi3, T).reshape(n * n, nA, -1)
    rep.compare("Lemma 6.2", "phi(1) psi(h#f) phi(a) = phi(h1 -> a <- S(h3)) psi(h2#f)", lhs, rhs, 2, f,
                [hs.names, A.names])
    # carrier associativity
    car = dd.carrier
    car.report.extend(check_structure(car.algebra(), "algebra", "A (x) H#H*"))
    rep.extend(car.report, "carrier: ")
    one = np.kron(np.kron(A.unit, H.unit), dd.Hstar.unit)
    rep.compare("carrier: left unit", "(1 (x) 1#eps) z = z", es("x,xyz->yz", one, car.table),
                f.eye(car.dim), 1, f, [car.names])
    ru = es("y,xyz->xz", one, car.table)
    rep.notes.append("1 (x) 1#eps is " + ("also a right unit" if np.array_equal(ru, f.eye(car.dim))
                                           else "not a right unit of the carrier"))
    # (iii)
    lhs = es("ijk,zk->ijz", car.table, Phi)
    rhs = es("xi,yj,xyz->ijz", Phi, Phi, T)
    rep.compare("Thm 6.3 homomorphism", "Phi(xy) = Phi(x) Phi(y) on A (x) H#H*", lhs, rhs, 2, f,
                [car.names, car.names])
    g = dd.restriction
    rl = es("ai,bj,ijz->abz", g, g, lhs)
    rr = es("ai,bj,ijz->abz", g, g, rhs)
    rep.compare("Thm 6.3 homomorphism on the restriction", "Phi(xy) = Phi(x) Phi(y) on partial smash # H*",
                rl, rr, 2, f)
    # (iv)
    e = dd.e_coords
    rep.compare("e idempotent", "e^2 = e", es("x,y,xyz->z", e, e, T).reshape(1, -1), e.reshape(1, -1), 1, f)
    # (v)
    cb = corner_basis(dd)
    sc = SpanCoordinates(cb, f)
    imgs = g.dot(Phi.T)
    bad = [i for i, v in enumerate(imgs) if not sc.contains(v)]
    rep.fact("corner containment", "Phi(partial smash # H*) lies in e (A (x) End(H)) e", not bad,
             "outside the corner", "inside", [bad[0]] if bad else [])
    # derived containment: Phi(u g u) = e Phi(g) e for the unit u of the restriction
    u = np.kron(dd.under.to_ambient(dd.under.unit), dd.Hstar.unit)
    ug = es("x,xiy->iy", u, car.table)
    ugu = es("iy,j,yjz->iz", ug, u, car.table)
    derived = ugu.dot(Phi.T)                            # row i: Phi(u b_i u)
    eg = es("x,ay,xyz->az", e, imgs, T)
    direct = es("ay,z,yzw->aw", eg, e, T)
    rep.compare("derived containment agrees", "Phi(u g u) = e Phi(g) e", es("ai,iz->az", g, derived), direct, 1, f)
    r = rank(imgs) if imgs.size else 0
    rep.notes.append(f"rank of Phi on the restriction {r} of dim {g.shape[0]}; corner dim {cb.shape[0]}"
                     f" ({'onto the corner' if r == cb.shape[0] else 'not onto the corner'})")
    return rep
