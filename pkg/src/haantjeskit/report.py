"""Verification reports: named checks with residuals, tolerances and a
pass/fail/finding status, serializable to deterministic JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .torsion import SampledResidual

__all__ = ["Check", "VerificationReport", "check_from_residual"]

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_FINDING = "finding"


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    reference: str
    status: str
    max_residual: float
    tolerance: float
    points_sampled: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "reference": self.reference,
            "status": self.status,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "points_sampled": self.points_sampled,
        }


def check_from_residual(check_id: str, description: str, reference: str,
                        sr: SampledResidual, finding: bool = False) -> Check:
    """Build a check from a sampled residual.

    ``finding`` marks checks that adjudicate a known ambiguity: they always
    report, never fail a run.
    """
    if finding:
        status = STATUS_FINDING
    else:
        status = STATUS_PASS if sr.passed else STATUS_FAIL
    return Check(check_id, description, reference, status,
                 float(sr.residual), float(sr.effective_tolerance),
                 sr.points)


@dataclass
class VerificationReport:
    suite: str
    seed: int
    params: dict
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def failed(self) -> list:
        return [c for c in self.checks if c.status == STATUS_FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "params": self.params,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def summary_lines(self):
        for c in self.checks:
            yield (f"[{c.status.upper():7s}] {c.id}: "
                   f"residual {c.max_residual:.3e} "
                   f"(tolerance {c.tolerance:.3e}, "
                   f"{c.points_sampled} points)")
