"""Closed-form minimal periods of the sequences (F_i^e mod F_j)_{i>=0}."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfDomainError

# One tag per dispatch clause, so callers can see which rule fired.
CASE_J0 = "J0"
CASE_J1_J2 = "J1_J2"
CASE_J3 = "J3"
CASE_J6_ODD = "J6_ODD"
CASE_J6_E2 = "J6_E2"
CASE_J6_EVEN_GE4 = "J6_EVEN_GE4"
CASE_EVEN_EVEN = "EVEN_EVEN"
CASE_EVEN_ODD = "EVEN_ODD"
CASE_ODD_E0MOD4 = "ODD_E0MOD4"
CASE_ODD_E2MOD4 = "ODD_E2MOD4"
CASE_ODD_ODD = "ODD_ODD"

CASE_LABELS = frozenset(
    {
        CASE_J0,
        CASE_J1_J2,
        CASE_J3,
        CASE_J6_ODD,
        CASE_J6_E2,
        CASE_J6_EVEN_GE4,
        CASE_EVEN_EVEN,
        CASE_EVEN_ODD,
        CASE_ODD_E0MOD4,
        CASE_ODD_E2MOD4,
        CASE_ODD_ODD,
    }
)


@dataclass(frozen=True)
class PeriodResult:
    """Minimal period of (F_i^e mod F_j), or the j = 0 non-periodic verdict."""

    j: int
    e: int
    period: int | None  # None exactly when the sequence is not periodic
    case_label: str

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    def to_record(self) -> dict:
        return {
            "j": self.j,
            "e": self.e,
            "outcome": "not_periodic" if self.period is None else self.period,
            "case_label": self.case_label,
        }


def _require_args(j: int, e: int) -> None:
    if j < 0:
        raise OutOfDomainError(f"j must be nonnegative, got {j}")
    if e < 1:
        raise OutOfDomainError(f"exponent must be at least 1, got {e}")


def period_closed_form(j: int, e: int) -> PeriodResult:
    """Minimal period by case dispatch, for any j >= 0 and e >= 1.

    Case table:
      j = 0           not periodic (the values F_i^e grow without bound)
      j in {1, 2}     1   (modulus F_j = 1, constant zero sequence)
      j = 3           3   (modulus 2, the block [0, 1, 1])
      j = 6           12 for odd e, 6 for e = 2, 3 for even e >= 4
      j even, j != 6  j for even e, 2j for odd e
      j odd, j >= 5   j for e = 0 mod 4, 2j for e = 2 mod 4, 4j for odd e
    """
    _require_args(j, e)
    if j == 0:
        return PeriodResult(j, e, None, CASE_J0)
    if j in (1, 2):
        return PeriodResult(j, e, 1, CASE_J1_J2)
    if j == 3:
        return PeriodResult(j, e, 3, CASE_J3)
    if j == 6:
        if e % 2 == 1:
            return PeriodResult(j, e, 12, CASE_J6_ODD)
        if e == 2:
            return PeriodResult(j, e, 6, CASE_J6_E2)
        return PeriodResult(j, e, 3, CASE_J6_EVEN_GE4)
    if j % 2 == 0:
        if e % 2 == 0:
            return PeriodResult(j, e, j, CASE_EVEN_EVEN)
        return PeriodResult(j, e, 2 * j, CASE_EVEN_ODD)
    if e % 4 == 0:
        return PeriodResult(j, e, j, CASE_ODD_E0MOD4)
    if e % 4 == 2:
        return PeriodResult(j, e, 2 * j, CASE_ODD_E2MOD4)
    return PeriodResult(j, e, 4 * j, CASE_ODD_ODD)


def period_divisibility_check(j: int, e: int, q: int) -> bool:
    """Whether the period at exponent q*e divides the period at exponent e.

    Raising the exponent can only coarsen the sequence, so this should hold
    for every j >= 1, e >= 1, q >= 1.
    """
    if j < 1:
        raise OutOfDomainError(f"j must be at least 1, got {j}")
    if q < 1:
        raise OutOfDomainError(f"multiplier must be at least 1, got {q}")
    p_e = period_closed_form(j, e).period
    p_qe = period_closed_form(j, q * e).period
    return p_e % p_qe == 0
