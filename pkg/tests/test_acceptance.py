"""Acceptance criteria, one exact check per criterion (zero tolerance).

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``;
either way one PASS/FAIL line per criterion is printed.
"""
import json
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from partialhopf import catalog                                            # noqa: E402
from partialhopf.actions import PartialBimoduleData, check_symmetry_assumption  # noqa: E402
from partialhopf.cli import main                                           # noqa: E402
from partialhopf.duality import build_duality_maps, check_duality, lambda_phi_isos  # noqa: E402
from partialhopf.envelope import check_envelope, check_phi_identities, check_right_ideal, ideal_criterion  # noqa: E402
from partialhopf.field import GF                                           # noqa: E402
from partialhopf.hopf import (AlgebraData, CoalgebraData, HopfData, check_hopf_morphism,  # noqa: E402
                              check_structure, dual_hopf)
from partialhopf.linalg import rank                                        # noqa: E402
from partialhopf.morita import MoritaError, build_morita, check_morita     # noqa: E402
from partialhopf.partial_rep import check_algebra_map, rep_into_end_A, rep_into_underline  # noqa: E402
from partialhopf.pipeline import verify                                    # noqa: E402
from partialhopf.smash import ambient_product                              # noqa: E402

from conftest import GLOBAL_NAMES, PARTIAL_NAMES, envelope, partial, underline  # noqa: E402


def _fails(rep):
    return [c.name for c in rep.failures()]


def criterion_1():
    h4 = catalog.sweedler_h4()
    hs = catalog.h4_dual_named()
    a = check_structure(h4, "hopf")
    b = check_structure(dual_hopf(h4), "hopf")
    # 1 -> 1*+c*, c -> T, x -> P, cx -> TP is the identity in the named basis
    c = check_hopf_morphism(h4.field.eye(4), h4, hs, "stated isomorphism")
    ok = a.ok and b.ok and c.ok
    return ok, f"H4 axioms {a.ok}, dual axioms {b.ok}, stated map fails {_fails(c)}"


def criterion_2():
    d = partial("kx-in-h4")
    amb = ambient_product(d)
    prod = amb.multiply(np.kron(d.A.e(1), d.H.e(1)), np.kron(d.A.e(1), d.H.e(2)))
    ok = not any(prod)
    return ok, f"(x (x) T)(x (x) P) = {list(map(str, prod))}"


def criterion_3():
    bad = []
    for name in PARTIAL_NAMES:
        s = underline(name)
        if not (s.report.ok and s.unit is not None and s.report.passed("associativity")):
            bad.append(name)
    return not bad, f"failing: {bad}" if bad else f"{len(PARTIAL_NAMES)} inputs closed, associative, unital"


def criterion_4():
    out, ok = [], True
    for name in ["central-idempotent-kz2", "kx-in-h4"]:
        gate = check_symmetry_assumption(partial(name)).ok
        env = envelope(name)
        rep = check_phi_identities(env)
        rep.extend(check_right_ideal(env))
        ok &= rep.ok
        out.append(f"{name} (symmetry gate {'pass' if gate else 'fail, forced'}): failing {_fails(rep)}")
    return ok, "; ".join(out)


def criterion_5():
    bad = []
    for name in PARTIAL_NAMES:
        rep = ideal_criterion(envelope(name))
        if not rep.passed("criterion agrees with ideal test"):
            bad.append(f"{name} (identity {rep['displayed identity'].status}, "
                       f"ideal {rep['phi(A) is an ideal of B'].status})")
    return not bad, f"disagreeing: {bad}" if bad else "verdicts agree on every input"


def criterion_6():
    rep = check_envelope(envelope("central-idempotent-kz2"))
    dims = {n: (envelope(n).dim, partial(n).A.dim, rank(envelope(n).theta)) for n in GLOBAL_NAMES}
    deg = all(b == a == r for b, a, r in dims.values())
    return rep.ok and deg, f"central idempotent failing {_fails(rep)}; global (dim B, dim A, rank theta) {dims}"


MORITA_IDENTITIES = ["M right module", "N left module", "M left module", "N right module",
                     "sigma balanced", "tau balanced", "sigma left linear", "sigma right linear",
                     "tau left linear", "tau right linear",
                     "tau(m, n) |> m' = m sigma(n, m')", "sigma(n, m) n' = n <| tau(m, n')"]


def criterion_7():
    bad = []
    for name in PARTIAL_NAMES:
        try:
            m = build_morita(envelope(name), underline(name))
        except MoritaError as exc:
            bad.append(f"{name}: {exc}")
            continue
        rep = check_morita(m)
        r = rank(m.phi_image)
        need = ["Phi multiplicative", "Phi injective"] + MORITA_IDENTITIES
        miss = [c for c in need if not rep.passed(c)]
        if miss or r != m.under.dim:
            bad.append(f"{name}: {miss} rank {r}/{m.under.dim}")
    return not bad, f"failing: {bad}" if bad else "all identities pass"


def criterion_8():
    bad = []
    for name in PARTIAL_NAMES:
        d = partial(name)
        for r in (rep_into_end_A(d), rep_into_underline(d, underline(name))):
            if not r.report.ok:
                bad.append(f"{name} {r.name}")
    return not bad, f"failing: {bad}" if bad else f"{2 * len(PARTIAL_NAMES)} representations, all basis pairs"


def criterion_9():
    out, ok = [], True
    for label, h in [("kZ2", catalog.group_algebra(2)), ("kZ3/F7", catalog.group_algebra(3, GF(7))),
                     ("H4", catalog.sweedler_h4())]:
        lam, ph, rep = lambda_phi_isos(h)
        good = rep.ok and rank(lam) == rank(ph) == h.dim ** 2
        ok &= good
        out.append(f"{label} {'ok' if good else _fails(rep)}")
    return ok, ", ".join(out)


def criterion_10():
    out, ok = [], True
    for name in PARTIAL_NAMES:
        dd = build_duality_maps(partial(name), underline(name))
        rep = check_duality(dd)
        need = ["Thm 6.3 homomorphism", "e idempotent", "corner containment"]
        miss = [c for c in need if not rep.passed(c)]
        ok &= not miss
        if miss or name == "kx-in-h4":
            out.append(f"{name} (carrier dim {dd.carrier.dim}) failing {miss}")
    return ok, "; ".join(out) or "all inputs pass"


def criterion_11():
    bad = []
    for name in GLOBAL_NAMES:
        d = partial(name)
        s = underline(name)
        if s.dim != d.A.dim * d.H.dim:
            bad.append(f"{name}: underline dim {s.dim}")
        env = envelope(name)
        if not (env.dim == d.A.dim == rank(env.theta)):
            bad.append(f"{name}: envelope dim {env.dim}")
        m = build_morita(env, s)
        n = m.smash.dim
        if not (m.M_basis.shape[0] == m.N_basis.shape[0] == n == rank(m.phi_image)
                and check_morita(m).ok):
            bad.append(f"{name}: Morita context not trivial")
        for r in (rep_into_end_A(d), rep_into_underline(d, s)):
            if not check_algebra_map(r).ok:
                bad.append(f"{name}: {r.name} not an algebra map")
        dd = build_duality_maps(d, s)
        if not np.array_equal(dd.e_coords, dd.AEndH.unit):
            bad.append(f"{name}: e != 1 (x) id")
    return not bad, f"failing: {bad}" if bad else f"classical objects recovered for {GLOBAL_NAMES}"


def _corruptions_caught(h: HopfData):
    """Add 1 to each structure constant in turn; every copy must fail with a counterexample."""
    f = h.field
    missed, total = [], 0
    parts = {"mult": h.mult, "comult": h.comult, "counit": h.counit, "antipode": h.antipode, "unit": h.unit}
    for label, arr in parts.items():
        for idx in np.ndindex(arr.shape):
            total += 1
            new = {k: v.copy() for k, v in parts.items()}
            new[label][idx] = new[label][idx] + f.one
            bad = HopfData(AlgebraData(f, new["mult"], new["unit"], h.names),
                           CoalgebraData(f, new["comult"], new["counit"]), new["antipode"])
            rep = check_structure(bad, "hopf")
            if rep.ok or any(c.counterexample is None for c in rep.failures()):
                missed.append((label, idx))
    return missed, total


def criterion_12():
    notes, ok = [], True
    with tempfile.TemporaryDirectory() as tmp:
        root = Path(tmp)
        main(["catalog", "central-idempotent-kz2", "--dir", str(root / "ci"), "--quiet"])
        src = str(root / "ci" / "action.json")
        for kind in ["underline-smash", "twisted-smash", "envelope", "duality-maps"]:
            a, b = root / f"{kind}-1.json", root / f"{kind}-2.json"
            main(["build", kind, src, "--out", str(a), "--quiet"])
            main(["build", kind, src, "--out", str(b), "--quiet"])
            ra, rb = root / "ra.json", root / "rb.json"
            main(["verify", "hopf", str(a), "--report", str(ra)])
            main(["verify", "hopf", str(b), "--report", str(rb)])
            same = a.read_bytes() == b.read_bytes() and ra.read_bytes() == rb.read_bytes()
            passed = json.loads(ra.read_text())["ok"]
            ok &= same and passed
            if not (same and passed):
                notes.append(f"{kind}: identical {same}, re-verifies {passed}")
    missed, total = _corruptions_caught(catalog.sweedler_h4())
    ok &= not missed
    # single-constant corruptions of the action tensors
    d = partial("sign-action-kz2")
    amiss = []
    for side in ("left", "right"):
        t = getattr(d, side)
        for idx in np.ndindex(t.shape):
            bad = t.copy()
            bad[idx] = bad[idx] + d.field.one
            args = {"left": d.left, "right": d.right, side: bad}
            rep = verify("partial-action", PartialBimoduleData(d.H, d.A, args["left"], args["right"]))
            if rep.ok:
                amiss.append((side, idx))
    ok &= not amiss
    notes.append(f"H4 corruptions caught {total - len(missed)}/{total}, action corruptions missed {amiss}")
    return ok, "; ".join(notes)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def line(i, fn):
    ok, detail = fn()
    return ok, f"CRITERION {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", range(1, 13))
def test_criterion(i, capsys):
    ok, text = line(i, CRITERIA[i - 1])
    with capsys.disabled():
        print("\n" + text)
    assert ok, text


if __name__ == "__main__":
    results = [line(i, fn) for i, fn in enumerate(CRITERIA, 1)]
    for _, text in results:
        print(text)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
