"""Parameter-level nonexistence calculus for quaternary Hermitian LCD codes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError


class Variant(str, enum.Enum):
    INAPPLICABLE = "Inapplicable"
    NONEXISTENCE_PROVEN = "NonexistenceProven"
    REDUCED_TO = "ReducedTo"


@dataclass(frozen=True)
class ReductionDecision:
    variant: Variant
    r4_value: int
    reduced_n: int | None = None
    reduced_k: int | None = None
    dual_condition_required: bool = False
    reason: str = ""

    def to_record(self) -> dict:
        return {
            "variant": self.variant.value,
            "r4": self.r4_value,
            "reduced_n": self.reduced_n,
            "reduced_k": self.reduced_k,
            "dual_condition_required": self.dual_condition_required,
            "reason": self.reason,
        }


def _check_positive(**kw: int) -> None:
    for name, v in kw.items():
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")


def r4(n: int, k: int, alpha: int) -> int:
    """``4**(k-1) * n - (4**k - 1)/3 * alpha`` in exact integer arithmetic."""
    _check_positive(n=n, k=k, alpha=alpha)
    return 4 ** (k - 1) * n - (4**k - 1) // 3 * alpha


def decide(n: int, k: int, alpha: int) -> ReductionDecision:
    """Classify ``(n, k, alpha)`` for the question "is there a Hermitian LCD [n, k, alpha] code?".

    No hypothesis on the dual distance of the target is needed; only the
    reduced instance in the second branch must be ruled out among codes with
    Hermitian dual distance >= 2.
    """
    r = r4(n, k, alpha)
    if k < 3:
        return ReductionDecision(Variant.INAPPLICABLE, r, reason="requires k >= 3")
    if 4 * alpha - 3 * n < 1:
        return ReductionDecision(Variant.INAPPLICABLE, r, reason="requires 4*alpha - 3*n >= 1")
    if 4 * r < k:
        return ReductionDecision(
            Variant.NONEXISTENCE_PROVEN, r,
            reason=f"branch (i): 4*r4 = {4 * r} < k = {k}; no Hermitian LCD [{n},{k},{alpha}] code",
        )
    return ReductionDecision(
        Variant.REDUCED_TO, r, 4 * r, 3 * r, True,
        reason=(f"branch (ii): 4*r4 = {4 * r} >= k = {k}; nonexistence of Hermitian LCD "
                f"[{n},{k},{alpha}] codes follows if no Hermitian LCD [{4 * r},{3 * r}] code "
                f"with dual distance >= 2 exists (conditional)"),
    )
