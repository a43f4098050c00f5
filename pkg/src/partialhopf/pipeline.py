"""Verification and build pipelines shared by the CLI and the test-suite."""
from __future__ import annotations

from .actions import PartialBimoduleData, check_partial_bimodule, check_symmetry_assumption
from .duality import DualityError, build_duality_maps, check_duality, comodule_and_module_structures
from .envelope import (EnvelopeError, build_envelope, check_envelope, check_phi_identities,
                       check_right_ideal, ideal_criterion)
from .hopf import AlgebraData, HopfData, check_structure
from .io import action_to_json, algebra_to_json, dense
from .morita import MoritaError, build_morita, check_morita
from .partial_rep import RepresentationError, rep_into_end_A, rep_into_underline
from .report import SKIPPED, Check, VerificationReport
from .smash import ClosureError, build_twisted_smash, build_underline_smash, pair_names

VERIFY_KINDS = ("hopf", "partial-action", "symmetry", "envelope", "morita", "partial-rep", "duality")
BUILD_KINDS = ("underline-smash", "twisted-smash", "envelope", "morita", "duality-maps")


class GateFailure(Exception):
    def __init__(self, message, report: VerificationReport):
        super().__init__(message)
        self.report = report


def _gate(rep: VerificationReport, gate: VerificationReport, label: str, force: bool):
    """Fold a prerequisite report in; without ``force`` a failure stops the pipeline."""
    if gate.ok:
        rep.extend(gate, f"{label}: ")
        return
    first = gate.failures()[0]
    if not force:
        rep.extend(gate, f"{label}: ")
        raise GateFailure(f"{label} failed ({first.name})", rep)
    rep.add(Check(f"{label} (gate)", first.paper_ref, SKIPPED, None,
                  f"failed at {first.counterexample.labels or first.counterexample.indices}; downgraded by --force"))
    rep.notes.append(f"warning: {label} failed; results below carry no guarantee")


def symmetry_gate(rep, d, force):
    _gate(rep, check_symmetry_assumption(d), "standing symmetry assumption", force)


def axioms_gate(rep, d, force):
    _gate(rep, check_partial_bimodule(d), "partial bimodule axioms", force)


def verify_algebra(a) -> VerificationReport:
    if isinstance(a, HopfData):
        return check_structure(a, "hopf")
    return check_structure(a, "algebra")


def _envelope_reports(rep, env):
    rep.extend(check_envelope(env))
    rep.extend(check_phi_identities(env))
    rep.extend(check_right_ideal(env))
    rep.extend(ideal_criterion(env))


def _ideal_gate(rep, env, force):
    sub = VerificationReport("envelope ideal check")
    ce = check_envelope(env)
    for name in ("(c) left ideal", "(c) right ideal"):
        sub.add(ce[name])
    _gate(rep, sub, "envelope ideal check", force)


def verify(kind: str, obj, force: bool = False) -> VerificationReport:
    """Run a verification pipeline; raises GateFailure when a gate stops it."""
    if kind == "hopf":
        return verify_algebra(obj)
    d: PartialBimoduleData = obj
    rep = VerificationReport(f"{kind} {d.name}".strip())
    if kind == "partial-action":
        rep.extend(check_partial_bimodule(d))
    elif kind == "symmetry":
        rep.extend(check_symmetry_assumption(d))
    elif kind == "envelope":
        symmetry_gate(rep, d, force)
        _envelope_reports(rep, build_envelope(d))
    elif kind == "morita":
        symmetry_gate(rep, d, force)
        env = build_envelope(d)
        _ideal_gate(rep, env, force)
        try:
            m = build_morita(env)
        except MoritaError as exc:
            rep.extend(exc.report)
            rep.fact("Morita context constructed", "Prop 4.2", False, str(exc), "constructed")
        else:
            rep.extend(check_morita(m))
    elif kind == "partial-rep":
        rep.extend(rep_into_end_A(d).report, "End(A): ")
        try:
            rep.extend(rep_into_underline(d).report, "partial smash: ")
        except (RepresentationError, ClosureError) as exc:
            rep.fact("partial smash: pi lands in the partial smash product", "Thm 5.3", False, str(exc), "inside")
    elif kind == "duality":
        symmetry_gate(rep, d, force)
        try:
            rep.extend(comodule_and_module_structures(d))
        except DualityError as exc:
            rep.fact("comodule structure", "coaction on the partial smash product", False, str(exc), "defined")
        rep.extend(check_duality(build_duality_maps(d)))
    else:
        raise ValueError(f"unknown verify kind {kind!r}")
    return rep


def build(kind: str, d: PartialBimoduleData, force: bool = False):
    """(output dict, report, summary line); raises GateFailure on a failed prerequisite."""
    f = d.field
    rep = VerificationReport(f"build {kind} {d.name}".strip())
    out = {"kind": kind, "subject": d.name}
    if kind == "underline-smash":
        axioms_gate(rep, d, force)
        s = build_underline_smash(d)
        rep.extend(s.report)
        out.update(dim=s.dim, ambient_basis=list(pair_names(d.A.names, d.H.names)),
                   inclusion=dense(f, s.inclusion), algebra=algebra_to_json(s.algebra()))
        return out, rep, f"partial smash product: dim {s.dim} inside dim {s.ambient_dim}"
    symmetry_gate(rep, d, force)
    env = build_envelope(d)
    if kind == "envelope":
        rep.extend(env.closure_report)
        out.update(dim_B=env.dim, theta=dense(f, env.theta), hom_basis=dense(f, env.B_basis))
        if env.B_table is not None:
            out["algebra"] = algebra_to_json(AlgebraData(f, env.B_table, env.B_unit))
            g = env.global_bimodule()
            if g is not None and env.B_unit is not None:
                out["action"] = action_to_json(g.as_partial())
        return out, rep, f"enveloping algebra: dim B {env.dim}, dim A {d.A.dim}"
    g = env.global_bimodule()
    if g is None:
        rep.fact("B is an algebra", "Def 3.11(a)", False, "B not closed under convolution", "algebra")
        raise GateFailure("the enveloping algebra is not closed under convolution", rep)
    if kind == "twisted-smash":
        t = build_twisted_smash(g)
        rep.extend(t.report)
        out.update(dim=t.dim, algebra=algebra_to_json(t.algebra()))
        return out, rep, f"twisted smash product B#H: dim {t.dim}"
    if kind == "morita":
        _ideal_gate(rep, env, force)
        try:
            m = build_morita(env)
        except MoritaError as exc:
            rep.extend(exc.report)
            raise GateFailure(str(exc), rep) from None
        rep.extend(m.report)
        out.update(dim_M=int(m.M_basis.shape[0]), dim_N=int(m.N_basis.shape[0]),
                   M_basis=dense(f, m.M_basis), N_basis=dense(f, m.N_basis),
                   sigma=dense(f, m.sigma), tau=dense(f, m.tau))
        return out, rep, f"Morita context: dim M {m.M_basis.shape[0]}, dim N {m.N_basis.shape[0]}"
    if kind == "duality-maps":
        dd = build_duality_maps(d)
        out.update(e=dense(f, dd.e_coords), phi_A=dense(f, dd.phiA), psi=dense(f, dd.psi),
                   Phi=dense(f, dd.PhiMap), algebra=algebra_to_json(dd.AEndH))
        return out, rep, f"duality maps: carrier dim {dd.carrier.dim}, target dim {dd.AEndH.dim}"
    raise ValueError(f"unknown build kind {kind!r}")


__all__ = ["VERIFY_KINDS", "BUILD_KINDS", "GateFailure", "verify", "build", "verify_algebra",
           "EnvelopeError", "ClosureError"]
