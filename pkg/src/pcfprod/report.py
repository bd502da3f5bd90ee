"""Verification records: one both-sides evaluation of one identity."""

from __future__ import annotations

from dataclasses import dataclass, field

IDENTITY_IDS = (
    "EQ3",
    "EQ10",
    "EQ11",
    "EQ12",
    "EQ13A",
    "EQ13B",
    "EQ14",
    "EQ15",
    "EQ8_EQ9",
)

_REL_FLOOR = 1e-300
_ABS_SWITCH = 1e-280


@dataclass(frozen=True)
class VerificationRecord:
    """Both side values of one identity at one parameter point.

    ``passed`` reflects the identity's configured tolerance: relative
    error for ordinary magnitudes, absolute error when the right side is
    essentially zero (|rhs| < 1e-280).  ``skipped`` marks grid points
    outside the identity's validity domain; such records carry no
    numbers and never count as failures.
    """

    identity_id: str
    params: dict[str, float]
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    passed: bool
    evaluations: int
    skipped: bool = False
    note: str = ""

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.passed else "fail"


def make_record(
    identity_id: str,
    params: dict[str, float],
    lhs: float,
    rhs: float,
    tol: float,
    evaluations: int,
    mode: str = "relative",
) -> VerificationRecord:
    """Build a record; ``passed`` applies ``tol`` per the identity's contract.

    ``mode="relative"`` compares rel_err against tol (abs_err when the
    right side is essentially zero).  ``mode="mixed"`` compares abs_err
    against tol*(1 + max|side|), for identities whose series route loses
    all relative accuracy to cancellation when the value is tiny.
    """
    if identity_id not in IDENTITY_IDS:
        raise ValueError(f"unknown identity id {identity_id!r}")
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / max(abs(lhs), abs(rhs), _REL_FLOOR)
    if mode == "mixed":
        passed = abs_err <= tol * (1.0 + max(abs(lhs), abs(rhs)))
    elif abs(rhs) < _ABS_SWITCH:
        passed = abs_err <= tol
    else:
        passed = rel_err <= tol
    return VerificationRecord(
        identity_id, dict(params), lhs, rhs, abs_err, rel_err, passed, evaluations
    )


def skipped_record(identity_id: str, params: dict[str, float], note: str) -> VerificationRecord:
    return VerificationRecord(
        identity_id, dict(params), float("nan"), float("nan"), float("nan"),
        float("nan"), False, 0, skipped=True, note=note,
    )
