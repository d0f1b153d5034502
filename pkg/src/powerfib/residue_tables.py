"""Closed-form residue tables covering one full minimal period.

The exponent 1 and exponent 2 builders assemble every entry from exact small
Fibonacci values F_0 .. F_j, never by iterating the recurrence modulo F_j.
That keeps them independent of the modular iteration in `oracle`, which
certifies them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import OutOfDomainError
from .fibcore import fib_exact, fib_mod, fib_prefix, pow_mod
from .periodicity import period_closed_form


@dataclass(frozen=True)
class ResidueTable:
    """One minimal period of rho_i = F_i^e mod F_j, entries in [0, F_j - 1]."""

    j: int
    e: int
    modulus: int
    period: int
    residues: tuple[int, ...]

    def to_record(self) -> dict:
        # big integers cross the wire as decimal strings
        return {
            "j": self.j,
            "e": self.e,
            "modulus": str(self.modulus),
            "period": self.period,
            "residues": [str(r) for r in self.residues],
        }


def _require_j(j: int) -> None:
    if j < 4:
        raise OutOfDomainError(
            f"closed-form tables need j >= 4; j={j} is a base case "
            "(see period_closed_form)"
        )


def _e1_entries(j: int) -> Iterator[tuple[int, str]]:
    """(residue, formula label) pairs for exponent 1, one full period.

    Even j, period 2j: the first half is F_i itself, then a zero at i = j,
    then mirrored values F_{2j-i} on odd i and complements F_j - F_{2j-i}
    on even i.  Odd j, period 4j: the same first half, but the mirror
    parity flips, and the second 2j-block repeats the first with every
    nonzero entry complemented.
    """
    fs = fib_prefix(j + 1)
    m = fs[j]
    if j % 2 == 0:
        for i in range(2 * j):
            if i < j:
                yield fs[i], f"F[{i}]"
            elif i == j:
                yield 0, "0"
            elif i % 2 == 1:
                yield fs[2 * j - i], f"F[{2 * j - i}]"
            else:
                yield m - fs[2 * j - i], f"Fj-F[{2 * j - i}]"
    else:
        for i in range(4 * j):
            if i < j:
                yield fs[i], f"F[{i}]"
            elif i == j:
                yield 0, "0"
            elif i < 2 * j:
                if i % 2 == 0:
                    yield fs[2 * j - i], f"F[{2 * j - i}]"
                else:
                    yield m - fs[2 * j - i], f"Fj-F[{2 * j - i}]"
            elif i == 2 * j:
                yield 0, "0"
            elif i < 3 * j:
                yield m - fs[i - 2 * j], f"Fj-F[{i - 2 * j}]"
            elif i == 3 * j:
                yield 0, "0"
            elif i % 2 == 0:
                yield m - fs[4 * j - i], f"Fj-F[{4 * j - i}]"
            else:
                yield fs[4 * j - i], f"F[{4 * j - i}]"


def _e2_entries(j: int) -> Iterator[tuple[int, str]]:
    """(residue, formula label) pairs for exponent 2, one full period.

    Even j = 2t, period j: plain squares F_i^2 up to the midpoint, then the
    reflected squares F_{j-i}^2.  Odd j = 2t+1, period 2j: squares up to
    i = t+1, complements F_j - F_{j-i}^2 up to i = j-1, a zero at i = j,
    then the first half mirrored (rho_i = rho_{2j-i}).
    """
    fs = fib_prefix(j + 1)
    m = fs[j]
    t = j // 2
    if j % 2 == 0:
        for i in range(j):
            if i <= t:
                yield fs[i] ** 2, f"F[{i}]^2"
            else:
                yield fs[j - i] ** 2, f"F[{j - i}]^2"
    else:
        first: list[int] = []
        for i in range(j):
            if i <= t + 1:
                first.append(fs[i] ** 2)
                yield first[-1], f"F[{i}]^2"
            else:
                first.append(m - fs[j - i] ** 2)
                yield first[-1], f"Fj-F[{j - i}]^2"
        yield 0, "0"
        for i in range(j + 1, 2 * j):
            yield first[2 * j - i], f"rho[{2 * j - i}]"


def residues_e1(j: int) -> ResidueTable:
    """Exponent 1 table for j >= 4: period 2j for even j, 4j for odd j."""
    _require_j(j)
    res = tuple(value for value, _ in _e1_entries(j))
    return ResidueTable(
        j=j, e=1, modulus=fib_exact(j), period=len(res), residues=res
    )


def residues_e2(j: int) -> ResidueTable:
    """Exponent 2 table for j >= 4: period j for even j, 2j for odd j."""
    _require_j(j)
    res = tuple(value for value, _ in _e2_entries(j))
    return ResidueTable(
        j=j, e=2, modulus=fib_exact(j), period=len(res), residues=res
    )


def residues_general(j: int, e: int) -> ResidueTable:
    """Any exponent e >= 1: direct powering across the closed-form period.

    The length comes from period_closed_form, not from the oracle, so the
    oracle's minimality scan stays an independent second route.
    """
    _require_j(j)
    if e < 1:
        raise OutOfDomainError(f"exponent must be at least 1, got {e}")
    period = period_closed_form(j, e).period
    m = fib_exact(j)
    res = tuple(pow_mod(fib_mod(k, m), e, m) for k in range(period))
    return ResidueTable(j=j, e=e, modulus=m, period=period, residues=res)


def case_breakdown(j: int, e: int) -> tuple[str, ...]:
    """The formula label behind each table entry, for e in {1, 2} only."""
    _require_j(j)
    if e == 1:
        return tuple(label for _, label in _e1_entries(j))
    if e == 2:
        return tuple(label for _, label in _e2_entries(j))
    raise OutOfDomainError(
        f"per-entry formulas exist for exponents 1 and 2 only, got e={e}"
    )
