"""Built-in example objects, constructed exactly and self-checked."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .actions import (GlobalBimoduleData, PartialBimoduleData, SkewPairData, check_global_bimodule,
                      check_partial_bimodule, check_skew_pair, check_symmetry_assumption,
                      coaction_to_action, induced_partial_from_global, rebase_acting,
                      skew_pair_action, trivial_global)
from .field import GF, QQ, Field
from .hopf import (AlgebraData, CoalgebraData, HopfData, change_basis, check_structure,
                   dual_hopf, es, solve_antipode)
from .report import VerificationReport


class CatalogError(ValueError):
    pass


def _require_odd_char(field: Field):
    if field.characteristic == 2:
        raise CatalogError("this example needs a field of characteristic != 2")


def _assert_ok(rep, what):
    if not rep.ok:
        raise CatalogError(f"{what} failed its own checks:\n{rep.summary()}")
    return rep


def sweedler_h4(field: Field = QQ) -> HopfData:
    """Sweedler's 4-dimensional Hopf algebra on the basis (1, c, x, cx).

    c^2 = 1, x^2 = 0, xc = -cx; c group-like, x (1, c)-skew primitive.
    The antipode is solved from the antipode axiom.
    """
    _require_odd_char(field)
    f = field
    mono = [(0, 0), (1, 0), (0, 1), (1, 1)]  # c^a x^b
    idx = {m: i for i, m in enumerate(mono)}
    mult = f.zeros((4, 4, 4))
    for i, (a, b) in enumerate(mono):
        for j, (a2, b2) in enumerate(mono):
            if b + b2 >= 2:
                continue
            # x^b c^a2 = (-1)^(b*a2) c^a2 x^b
            sign = -1 if (b * a2) % 2 else 1
            mult[i, j, idx[((a + a2) % 2, b + b2)]] = f(sign)
    comult = f.zeros((4, 4, 4))
    comult[0, 0, 0] = f.one                       # 1 -> 1(x)1
    comult[1, 1, 1] = f.one                       # c -> c(x)c
    comult[2, 2, 0] = comult[2, 1, 2] = f.one     # x -> x(x)1 + c(x)x
    comult[3, 3, 1] = comult[3, 0, 3] = f.one     # cx -> cx(x)c + 1(x)cx
    counit = f.array([1, 1, 0, 0])
    alg = AlgebraData(f, mult, f.array([1, 0, 0, 0]), ("1", "c", "x", "cx"))
    coalg = CoalgebraData(f, comult, counit)
    s = solve_antipode(alg, coalg)
    h = HopfData(alg, coalg, s)
    # columns: S(1)=1, S(c)=c, S(x)=-cx, S(cx)=x
    expected = _cols(f, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    if not np.array_equal(s, expected):
        raise CatalogError("solved H4 antipode differs from S(c)=c, S(x)=-cx")
    _assert_ok(check_structure(h, "hopf"), "H4")
    return h


def _cols(f: Field, columns) -> np.ndarray:
    """Matrix from a list of image columns."""
    return f.array(columns).T.copy()


def group_algebra(n: int, field: Field = QQ) -> HopfData:
    """k[Z_n] on the basis g^0..g^(n-1)."""
    if n < 1:
        raise ValueError("order must be positive")
    f = field
    mult = f.zeros((n, n, n))
    comult = f.zeros((n, n, n))
    for a in range(n):
        comult[a, a, a] = f.one
        for b in range(n):
            mult[a, b, (a + b) % n] = f.one
    names = tuple("1" if a == 0 else ("g" if a == 1 else f"g{a}") for a in range(n))
    alg = AlgebraData(f, mult, f.basis_vector(n, 0), names)
    coalg = CoalgebraData(f, comult, f.array([1] * n))
    s = f.zeros((n, n))
    for a in range(n):
        s[(-a) % n, a] = f.one
    h = HopfData(alg, coalg, s)
    _assert_ok(check_structure(h, "hopf"), f"kZ{n}")
    return h


H4_DUAL_NAMES = ("1*+c*", "T", "P", "TP")


def h4_dual_basis_matrix(field: Field = QQ) -> np.ndarray:
    """Columns: 1*+c*, T = 1*-c*, P = x*+(cx)*, TP = x*-(cx)* in dual-basis coordinates."""
    return _cols(field, [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 1, -1]])


def h4_dual_named(field: Field = QQ) -> HopfData:
    """The dual of H4 re-based to the named basis {1*+c*, T, P, TP}."""
    _require_odd_char(field)
    hs = dual_hopf(sweedler_h4(field))
    return change_basis(hs, h4_dual_basis_matrix(field), H4_DUAL_NAMES)


# --------------------------------------------------------------------------
# partial bimodule algebras

def kx_algebra(field: Field = QQ) -> AlgebraData:
    """k[x]/(x^2) = span{1, x} inside H4."""
    f = field
    m = f.zeros((2, 2, 2))
    m[0, 0, 0] = m[0, 1, 1] = m[1, 0, 1] = f.one
    return AlgebraData(f, m, f.array([1, 0]), ("1", "x"))


KX_RIGHT_IDEMPOTENT = (Fraction(1, 2), Fraction(1, 2), 0, Fraction(1, 2))  # 1/2(1 + c + cx)
KX_LEFT_IDEMPOTENT = (Fraction(1, 2), Fraction(1, 2), 0, Fraction(1, 2))


def kx_coactions(field: Field = QQ):
    """rho_r(a) = a (x) 1/2(1+c+cx) and rho_l(a) = 1/2(1+c+cx) (x) a on A = span{1, x}.

    rho_r feeds the left H4*-action, rho_l the right one.
    """
    f = field
    er, el = f.array(KX_RIGHT_IDEMPOTENT), f.array(KX_LEFT_IDEMPOTENT)
    rho_r = f.zeros((2, 2, 4))
    rho_l = f.zeros((2, 4, 2))
    for j in range(2):
        rho_r[j, j, :] = er
        rho_l[j, :, j] = el
    return rho_l, rho_r


def kx_in_h4_bimodule(field: Field = QQ):
    """A = k[x] as a partial H4*-bimodule algebra, acting basis {1*+c*, T, P, TP}.

    Its axiom verdicts are computed, not asserted; see :func:`check_partial_bimodule`.
    """
    _require_odd_char(field)
    h = sweedler_h4(field)
    rho_l, rho_r = kx_coactions(field)
    d = coaction_to_action(h, kx_algebra(field), rho_l, rho_r, "k[x] in H4")
    return rebase_acting(d, h4_dual_basis_matrix(field), H4_DUAL_NAMES)


def check_coaction_idempotent(h: HopfData, e) -> VerificationReport:
    f = h.field
    e = f.array(e)
    rep = VerificationReport("central idempotent coaction data")
    ee = np.outer(e, e)
    d = es("i,ipq->pq", e, h.comult)
    lm = es("i,j,ijk->k", e, e, h.mult)
    rep.compare("idempotent", "e e = e", lm.reshape(1, -1), e.reshape(1, -1), 1, f)
    rep.fact("counit", "eps(e) = 1", e.dot(h.counit) == 1, f.format(e.dot(h.counit)), "1")
    el = es("a,ajx->jx", e, h.mult)      # e * b_j
    er = es("a,jax->jx", e, h.mult)      # b_j * e
    rep.compare("central", "e h = h e", el, er, 1, f, [h.names])
    rep.compare("(e (x) 1) Delta(e) = e (x) e", "coaction condition",
                es("a,apx,pq->xq", e, h.mult, d).reshape(1, -1), ee.reshape(1, -1), 1, f)
    rep.compare("Delta(e) (e (x) 1) = e (x) e", "coaction condition",
                es("pq,pax,a->xq", d, h.mult, e).reshape(1, -1), ee.reshape(1, -1), 1, f)
    return rep


def central_idempotent_example(h: HopfData, e, name: str = "") -> PartialBimoduleData:
    """A = k over H* with f -> x = <f, e> x and x <- g = <g, e> x."""
    f = h.field
    rep = check_coaction_idempotent(h, e)
    if not rep.ok:
        bad = rep.failures()[0]
        raise CatalogError(f"e fails the precondition {bad.name!r}")
    e = f.array(e)
    A = AlgebraData(f, f.ones((1, 1, 1)), f.array([1]), ("1",))
    rho_r = e.reshape(1, 1, -1).copy()
    rho_l = e.reshape(1, -1, 1).copy()
    d = coaction_to_action(h, A, rho_l, rho_r, name or "central idempotent")
    _assert_ok(check_partial_bimodule(d), d.name)
    _assert_ok(check_symmetry_assumption(d), d.name)
    return d


def central_idempotent_kz2(field: Field = QQ) -> PartialBimoduleData:
    _require_odd_char(field)
    h = group_algebra(2, field)
    return central_idempotent_example(h, [Fraction(1, 2), Fraction(1, 2)], "central idempotent kZ2")


def sign_action_kz2(field: Field = QQ) -> GlobalBimoduleData:
    """kZ2 acting on itself by g |> g^a = (-1)^a g^a = g^a <| g."""
    f = field
    h = group_algebra(2, f)
    t = f.zeros((2, 2, 2))
    for a in range(2):
        t[0, a, a] = f.one
        t[1, a, a] = f(-1 if a else 1)
    g = GlobalBimoduleData(h, h.algebra, t, t.copy(), "sign action kZ2")
    _assert_ok(check_global_bimodule(g), g.name)
    return g


def induced_kz2(field: Field = QQ) -> PartialBimoduleData:
    """The sign action restricted to the ideal k e, e = (1+g)/2."""
    _require_odd_char(field)
    f = field
    g = sign_action_kz2(f)
    e = f.array([Fraction(1, 2), Fraction(1, 2)])
    return induced_partial_from_global(g, e.reshape(1, -1), e, "induced from sign action on k e")


def trivial_h4_on_k(field: Field = QQ) -> GlobalBimoduleData:
    h = sweedler_h4(field)
    A = AlgebraData(field, field.ones((1, 1, 1)), field.array([1]), ("1",))
    g = trivial_global(h, A, "trivial H4 action on k")
    _assert_ok(check_global_bimodule(g), g.name)
    return g


def zn_skew_pair(n: int = 2, field: Field = QQ) -> SkewPairData:
    """sigma(g^a, g^b) = w^(ab) on kZn x kZn for a primitive n-th root of unity w."""
    f = field
    w = _root_of_unity(n, f)
    a = group_algebra(n, f)
    sigma = f.zeros((n, n))
    for i in range(n):
        for j in range(n):
            sigma[i, j] = w ** ((i * j) % n) if n > 1 else f.one
    s = SkewPairData(a, a, sigma, f"Z{n} character pairing")
    _assert_ok(check_skew_pair(s), s.name)
    return s


def _root_of_unity(n: int, f: Field):
    if n <= 2:
        if n == 2 and f.characteristic == 2:
            raise CatalogError("no primitive square root of unity in characteristic 2")
        return f(-1) if n == 2 else f.one
    p = f.characteristic
    if p == 0 or (p - 1) % n:
        raise CatalogError(f"the field has no primitive {n}-th root of unity")
    for g in range(2, p):
        w = f(g) ** ((p - 1) // n)
        if all(w ** k != 1 for k in range(1, n)):
            return w
    raise CatalogError(f"no primitive {n}-th root of unity found")


def skew_pair_z2(field: Field = QQ) -> PartialBimoduleData:
    return skew_pair_action(zn_skew_pair(2, field), "skew pair Z2")


# --------------------------------------------------------------------------
# named entries

@dataclass
class CatalogEntry:
    name: str
    kind: str  # hopf | partial | global | skew
    provenance: str
    build: Callable
    hopf_file: str = ""   # file name for the acting Hopf algebra when emitted


CATALOG = [
    CatalogEntry("h4", "hopf", "Ex 3.6", sweedler_h4),
    CatalogEntry("h4-dual", "hopf", "Ex 3.6", h4_dual_named),
    CatalogEntry("kz2", "hopf", "§1 (group algebras)", lambda: group_algebra(2, QQ)),
    CatalogEntry("kz3-f7", "hopf", "§1 (group algebras)", lambda: group_algebra(3, GF(7))),
    CatalogEntry("kx-in-h4", "partial", "Ex 3.6", kx_in_h4_bimodule, "h4star"),
    CatalogEntry("central-idempotent-kz2", "partial", "§3", central_idempotent_kz2, "kz2star"),
    CatalogEntry("skew-pair-z2", "partial", "Ex 3.5", skew_pair_z2, "kz2"),
    CatalogEntry("induced-kz2", "partial", "Lemma 3.8", induced_kz2, "kz2"),
    CatalogEntry("sign-action-kz2", "global", "Lemma 3.8", sign_action_kz2, "kz2"),
    CatalogEntry("trivial-h4-on-k", "global", "Def 3.11 (global case)", trivial_h4_on_k, "h4"),
]


def catalog_names():
    return [c.name for c in CATALOG]


def get_entry(name: str) -> CatalogEntry:
    for c in CATALOG:
        if c.name == name:
            return c
    raise KeyError(name)


def partial_entries():
    """Every partial bimodule of the catalog, global ones included via restriction."""
    out = []
    for c in CATALOG:
        if c.kind == "partial":
            out.append((c.name, c.build()))
        elif c.kind == "global":
            out.append((c.name, c.build().as_partial()))
    return out
