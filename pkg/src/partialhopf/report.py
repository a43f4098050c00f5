"""Verification reports: named checks with pass/fail/skipped status.

A failed check always carries a counterexample: the lexicographically first
tuple of basis indices where the two sides differ, plus both values.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .field import Field
from .linalg import fmt_vector

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Counterexample:
    indices: list[int]
    lhs: str
    rhs: str
    labels: list[str] | None = None

    def to_dict(self):
        d = {"indices": [int(i) for i in self.indices], "lhs": self.lhs, "rhs": self.rhs}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d


@dataclass
class Check:
    name: str
    paper_ref: str
    status: str
    counterexample: Counterexample | None = None
    detail: str | None = None

    def to_dict(self):
        d = {"name": self.name, "paper_ref": self.paper_ref, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.to_dict()
        if self.detail is not None:
            d["detail"] = self.detail
        return d


@dataclass
class VerificationReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def passed(self, name: str) -> bool:
        return self[name].status == PASS

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def compare(self, name, paper_ref, lhs, rhs, naxes, field: Field,
                labels=None, detail=None) -> Check:
        """Compare two arrays whose first ``naxes`` axes enumerate basis tuples.

        ``labels`` optionally gives, per tuple axis, the basis names used to
        annotate a counterexample.
        """
        lhs = np.asarray(lhs, dtype=object)
        rhs = np.asarray(rhs, dtype=object)
        if lhs.shape != rhs.shape:
            raise ValueError(f"{name}: shape mismatch {lhs.shape} vs {rhs.shape}")
        shape = lhs.shape[:naxes]
        lf = lhs.reshape(shape + (-1,))
        rf = rhs.reshape(shape + (-1,))
        for idx in np.ndindex(shape):
            if not np.array_equal(lf[idx], rf[idx]):
                names = None
                if labels is not None:
                    names = [labels[k][i] for k, i in enumerate(idx)]
                cx = Counterexample(list(idx), fmt_vector(lf[idx], field),
                                    fmt_vector(rf[idx], field), names)
                return self.add(Check(name, paper_ref, FAIL, cx, detail))
        return self.add(Check(name, paper_ref, PASS, None, detail))

    def fact(self, name, paper_ref, ok: bool, lhs: str = "", rhs: str = "",
             indices=(), detail=None) -> Check:
        """Record a boolean check; ``lhs``/``rhs`` describe the failure."""
        if ok:
            return self.add(Check(name, paper_ref, PASS, None, detail))
        return self.add(Check(name, paper_ref, FAIL,
                              Counterexample(list(indices), lhs, rhs), detail))

    def skip(self, name, paper_ref, detail=None) -> Check:
        return self.add(Check(name, paper_ref, SKIPPED, None, detail))

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.paper_ref, c.status,
                                     c.counterexample, c.detail))
        self.notes.extend(other.notes)

    def to_dict(self):
        d = {"subject": self.subject, "ok": self.ok,
             "checks": [c.to_dict() for c in self.checks]}
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def summary(self) -> str:
        lines = [f"{self.subject}:"]
        for c in self.checks:
            line = f"  [{c.status:7}] {c.name}"
            if c.counterexample is not None:
                cx = c.counterexample
                where = cx.labels if cx.labels else cx.indices
                line += f"  at {where}: {cx.lhs} != {cx.rhs}"
            lines.append(line)
        return "\n".join(lines)
