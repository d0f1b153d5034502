"""Exact and modular Fibonacci arithmetic.

Two deliberately separate evaluation routes: fib_exact runs the recurrence
step by step on exact integers, fib_pair_mod uses fast doubling modulo m.
Keeping them independent lets each one certify the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidModulusError, OutOfDomainError


def _require_index(n: int) -> None:
    if n < 0:
        raise OutOfDomainError(f"Fibonacci index must be nonnegative, got {n}")


def _require_modulus(m: int) -> None:
    if m < 2:
        raise InvalidModulusError(f"modulus must be at least 2, got {m}")


def fib_exact(n: int) -> int:
    """F_n as an exact integer, by iterating the recurrence n times."""
    _require_index(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_prefix(count: int) -> list[int]:
    """The first `count` Fibonacci numbers [F_0, ..., F_{count-1}], exact."""
    if count < 0:
        raise OutOfDomainError(f"count must be nonnegative, got {count}")
    out = []
    a, b = 0, 1
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


@dataclass(frozen=True)
class FibPair:
    """Consecutive residues (F_n mod m, F_{n+1} mod m)."""

    n: int
    f_n: int
    f_n1: int
    modulus: int

    def step(self) -> FibPair:
        """The pair one index later; one application of the recurrence."""
        return FibPair(
            n=self.n + 1,
            f_n=self.f_n1,
            f_n1=(self.f_n + self.f_n1) % self.modulus,
            modulus=self.modulus,
        )


def fib_pair_mod(n: int, m: int) -> FibPair:
    """(F_n, F_{n+1}) mod m by fast doubling over the bits of n, MSB first.

    Uses F_{2k} = F_k (2 F_{k+1} - F_k) and F_{2k+1} = F_k^2 + F_{k+1}^2,
    so the cost is O(log n) multiplications however large n is.
    """
    _require_modulus(m)
    _require_index(n)
    a, b = 0, 1  # (F_0, F_1)
    if n:
        for bit in bin(n)[2:]:
            # maps (F_k, F_{k+1}) to (F_2k, F_2k+1); % keeps 2b - a in range
            c = a * ((2 * b - a) % m) % m
            d = (a * a + b * b) % m
            if bit == "1":
                a, b = d, (c + d) % m
            else:
                a, b = c, d
    return FibPair(n=n, f_n=a, f_n1=b, modulus=m)


def fib_mod(n: int, m: int) -> int:
    """F_n mod m, normalized to [0, m - 1]."""
    return fib_pair_mod(n, m).f_n


def pow_mod(a: int, e: int, m: int) -> int:
    """a^e mod m for nonnegative a and e; a^0 is 1 mod m."""
    _require_modulus(m)
    if a < 0:
        raise OutOfDomainError(f"base must be nonnegative, got {a}")
    if e < 0:
        raise OutOfDomainError(f"exponent must be nonnegative, got {e}")
    return pow(a, e, m)
