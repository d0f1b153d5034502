"""Exact checks of the identities and divisor facts the closed forms rest on.

Covers the gcd law gcd(F_n, F_m) = F_gcd(n,m), the index-addition formula,
the Catalan and Cassini identities, the squared-term congruence lemma, the
zero positions of power residues, and Carmichael-style primitive prime
divisors of F_j.  Every check is exact integer arithmetic; sweeps aggregate
results into reports that carry a genuine counterexample when one exists.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from .errors import OutOfDomainError, ResourceGuardError
from .fibcore import fib_exact, fib_prefix

ALL_PASS = "all_pass"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "not_applicable"

TRIAL_DIVISION_BOUND = 10**6
DEFAULT_J_FACT_MAX = 80

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Counterexample:
    """Inputs at which a claim failed, with both evaluated sides."""

    inputs: dict[str, int]
    lhs: int
    rhs: int

    def to_record(self) -> dict:
        return {"inputs": dict(self.inputs), "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of sweeping one identity over a stated domain."""

    identity_name: str
    domain_description: str
    cases_checked: int
    verdict: str  # all_pass, counterexample, or not_applicable
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == ALL_PASS

    def to_record(self) -> dict:
        rec = {
            "identity": self.identity_name,
            "domain": self.domain_description,
            "cases": self.cases_checked,
            "verdict": self.verdict,
        }
        if self.counterexample is not None:
            rec["counterexample"] = self.counterexample.to_record()
        return rec


# ---------------------------------------------------------------- identities
#
# Each identity has an evaluator returning (lhs, rhs) so that sweeps can
# record real two-sided counterexamples; the check_* wrappers just compare.


def _eval_gcd(n: int, m: int) -> tuple[int, int]:
    if n < 0 or m < 0:
        raise OutOfDomainError(f"indices must be nonnegative, got ({n}, {m})")
    if n == 0 and m == 0:
        raise OutOfDomainError("gcd(F_0, F_0) = gcd(0, 0) is undefined")
    return math.gcd(fib_exact(n), fib_exact(m)), fib_exact(math.gcd(n, m))


def check_gcd_identity(n: int, m: int) -> bool:
    """gcd(F_n, F_m) == F_gcd(n, m); the (0, 0) corner is excluded."""
    lhs, rhs = _eval_gcd(n, m)
    return lhs == rhs


def _eval_addition(n: int, m: int) -> tuple[int, int]:
    if n < 1:
        raise OutOfDomainError(f"n must be at least 1 (F_(n-1) is used), got {n}")
    if m < 0:
        raise OutOfDomainError(f"m must be nonnegative, got {m}")
    fs = fib_prefix(n + m + 2)
    return fs[n + m], fs[n - 1] * fs[m] + fs[n] * fs[m + 1]


def check_addition(n: int, m: int) -> bool:
    """F_{n+m} == F_{n-1} F_m + F_n F_{m+1} for n >= 1, m >= 0."""
    lhs, rhs = _eval_addition(n, m)
    return lhs == rhs


def _eval_catalan(n: int, r: int) -> tuple[int, int]:
    if r < 0 or n < r:
        raise OutOfDomainError(f"need n >= r >= 0, got (n={n}, r={r})")
    fs = fib_prefix(n + r + 1)
    lhs = fs[n] ** 2 - fs[n - r] * fs[n + r]
    rhs = (-1) ** (n - r) * fs[r] ** 2
    return lhs, rhs


def check_catalan(n: int, r: int) -> bool:
    """F_n^2 - F_{n-r} F_{n+r} == (-1)^(n-r) F_r^2 for n >= r >= 0."""
    lhs, rhs = _eval_catalan(n, r)
    return lhs == rhs


def _eval_cassini(n: int) -> tuple[int, int]:
    if n < 1:
        raise OutOfDomainError(f"n must be at least 1, got {n}")
    fs = fib_prefix(n + 2)
    return fs[n] ** 2 - fs[n - 1] * fs[n + 1], (-1) ** (n - 1)


def check_cassini(n: int) -> bool:
    """F_n^2 - F_{n-1} F_{n+1} == (-1)^(n-1) for n >= 1."""
    lhs, rhs = _eval_cassini(n)
    return lhs == rhs


class SquareLemmaVerdict(NamedTuple):
    """The four parts of the squared-term lemma at one (k, alpha)."""

    bound_even_index: bool  # F_k^2 < F_2k
    congruence_even_index: bool  # F_{k+a}^2 = F_{k-a}^2 mod F_2k
    bound_odd_index: bool  # F_{k+1}^2 < F_{2k+1}
    congruence_odd_index: bool  # F_{k+1+a}^2 = -F_{k-a}^2 mod F_{2k+1}

    def all_hold(self) -> bool:
        return all(self)


def check_square_lemma(k: int, alpha: int) -> SquareLemmaVerdict:
    """Exact check of all four parts, for k >= 2 and 0 <= alpha <= k."""
    if k < 2:
        raise OutOfDomainError(f"k must be at least 2, got {k}")
    if alpha < 0 or alpha > k:
        raise OutOfDomainError(f"need 0 <= alpha <= k, got alpha={alpha}, k={k}")
    fs = fib_prefix(2 * k + 2)
    return SquareLemmaVerdict(
        bound_even_index=fs[k] ** 2 < fs[2 * k],
        congruence_even_index=(fs[k + alpha] ** 2 - fs[k - alpha] ** 2) % fs[2 * k] == 0,
        bound_odd_index=fs[k + 1] ** 2 < fs[2 * k + 1],
        congruence_odd_index=(fs[k + 1 + alpha] ** 2 + fs[k - alpha] ** 2) % fs[2 * k + 1] == 0,
    )


def _eval_square_lemma(k: int, alpha: int) -> tuple[int, int]:
    """(lhs, rhs) of the first failing part, or of part 1 when all hold.

    Bound parts claim lhs < rhs is witnessed by lhs != rhs after clamping;
    the congruence parts reduce both sides mod the relevant F index.
    """
    verdict = check_square_lemma(k, alpha)
    fs = fib_prefix(2 * k + 2)
    if not verdict.bound_even_index:
        return fs[k] ** 2, fs[2 * k]
    if not verdict.congruence_even_index:
        return fs[k + alpha] ** 2 % fs[2 * k], fs[k - alpha] ** 2 % fs[2 * k]
    if not verdict.bound_odd_index:
        return fs[k + 1] ** 2, fs[2 * k + 1]
    if not verdict.congruence_odd_index:
        return fs[k + 1 + alpha] ** 2 % fs[2 * k + 1], (-(fs[k - alpha] ** 2)) % fs[2 * k + 1]
    return 0, 0


@dataclass(frozen=True)
class ZeroPositionsOutcome:
    """Result of testing F_i^e = 0 mod F_j exactly when j divides i."""

    j: int
    e: int
    i_max: int
    verdict: str  # all_pass, counterexample, or not_applicable (j = 6)
    witness: int | None = None  # smallest index where the two sides differ


def check_zero_positions(j: int, e: int, i_max: int) -> ZeroPositionsOutcome:
    """Scan i in [0, i_max] for the zero-position biconditional.

    j = 6 sits outside the claim: F_6 = 2^3 while F_3 = 2, so high enough
    powers of F_3 already vanish mod F_6.  It gets a not_applicable verdict
    carrying the smallest in-range witness (None if i_max is too small to
    show one).
    """
    if j < 4:
        raise OutOfDomainError(f"zero positions need j >= 4, got {j}")
    if e < 1:
        raise OutOfDomainError(f"exponent must be at least 1, got {e}")
    if i_max < 0:
        raise OutOfDomainError(f"i_max must be nonnegative, got {i_max}")
    m = fib_exact(j)
    witness = None
    a, b = 0, 1
    for i in range(i_max + 1):
        vanishes = pow(a, e, m) == 0
        expected = i % j == 0
        if vanishes != expected:
            witness = i
            break
        a, b = b, (a + b) % m
    if j == 6:
        return ZeroPositionsOutcome(j, e, i_max, NOT_APPLICABLE, witness)
    if witness is None:
        return ZeroPositionsOutcome(j, e, i_max, ALL_PASS)
    return ZeroPositionsOutcome(j, e, i_max, COUNTEREXAMPLE, witness)


# ------------------------------------------------- primitive prime divisors


def _is_prime_u64(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2^64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_factor(n: int) -> tuple[list[tuple[int, int]], int]:
    """Factors found below TRIAL_DIVISION_BOUND plus the remaining cofactor."""
    factors: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            mult = 0
            while n % p == 0:
                n //= p
                mult += 1
            factors.append((p, mult))
    d = 5
    while d <= TRIAL_DIVISION_BOUND and d * d <= n:
        for p in (d, d + 2):
            if n % p == 0:
                mult = 0
                while n % p == 0:
                    n //= p
                    mult += 1
                factors.append((p, mult))
        d += 6
    return factors, n


def _rank_of_apparition(q: int, stop: int) -> int | None:
    """min{i >= 1 : q | F_i}, scanning no further than i = stop."""
    a, b = 0, 1
    for i in range(1, stop + 1):
        a, b = b, (a + b) % q
        if a == 0:
            return i
    return None


@dataclass(frozen=True)
class PrimitiveDivisorResult:
    """Smallest prime dividing F_j but no earlier F_i, with factor evidence."""

    j: int
    primitive_prime: int | None
    rank_of_apparition: int | None
    factor_trace: tuple[tuple[int, int], ...]  # (prime, multiplicity), ascending

    def to_record(self) -> dict:
        return {
            "j": self.j,
            "primitive_prime": None
            if self.primitive_prime is None
            else str(self.primitive_prime),
            "rank_of_apparition": self.rank_of_apparition,
            "factor_trace": [[str(p), mult] for p, mult in self.factor_trace],
        }


def primitive_prime_divisor(j: int, j_fact_max: int = DEFAULT_J_FACT_MAX) -> PrimitiveDivisorResult:
    """Find the smallest primitive prime divisor of F_j, or report none.

    F_j is factored by trial division; a leftover cofactor is accepted if a
    deterministic 64-bit primality test confirms it prime, otherwise the
    factorization is out of reach and a resource guard fires carrying the
    partial trace.  Each prime's rank of apparition is found by scanning
    F_i mod q, which stops by i = j because q divides F_j.
    """
    if j < 3:
        raise OutOfDomainError(f"primitive divisors need j >= 3, got {j}")
    if j > j_fact_max:
        raise ResourceGuardError(
            f"j={j} exceeds the factorization guard j_fact_max={j_fact_max}"
        )
    n = fib_exact(j)
    factors, cofactor = _trial_factor(n)
    if cofactor > 1:
        if cofactor >= 2**64:
            raise ResourceGuardError(
                f"cofactor of F_{j} exceeds 64 bits; cannot certify primality",
                partial=tuple(factors),
            )
        if not _is_prime_u64(cofactor):
            raise ResourceGuardError(
                f"cofactor {cofactor} of F_{j} is composite and beyond the "
                f"trial division bound {TRIAL_DIVISION_BOUND}",
                partial=tuple(factors),
            )
        factors.append((cofactor, 1))
    factors.sort()
    for q, _ in factors:
        rank = _rank_of_apparition(q, j)
        if rank == j:
            return PrimitiveDivisorResult(
                j=j,
                primitive_prime=q,
                rank_of_apparition=rank,
                factor_trace=tuple(factors),
            )
    return PrimitiveDivisorResult(
        j=j,
        primitive_prime=None,
        rank_of_apparition=None,
        factor_trace=tuple(factors),
    )


# -------------------------------------------------------------------- sweeps


def gcd_sample_pairs(
    count: int = 200, index_max: int = 60, seed: int = 1729
) -> list[tuple[int, int]]:
    """A reproducible sample of index pairs for the gcd sweep, (0,0) excluded."""
    rng = random.Random(seed)
    pairs: list[tuple[int, int]] = []
    while len(pairs) < count:
        n, m = rng.randint(0, index_max), rng.randint(0, index_max)
        if (n, m) != (0, 0):
            pairs.append((n, m))
    return pairs


def _equation_sweep(
    name: str,
    domain: str,
    inputs_list: Iterable[dict[str, int]],
    evaluate: Callable[..., tuple[int, int]],
) -> VerificationReport:
    count = 0
    for inputs in inputs_list:
        count += 1
        lhs, rhs = evaluate(**inputs)
        if lhs != rhs:
            return VerificationReport(
                name, domain, count, COUNTEREXAMPLE, Counterexample(inputs, lhs, rhs)
            )
    return VerificationReport(name, domain, count, ALL_PASS)


def sweep_gcd(pairs: Iterable[tuple[int, int]] | None = None) -> VerificationReport:
    pairs = gcd_sample_pairs() if pairs is None else list(pairs)
    return _equation_sweep(
        "gcd",
        f"{len(pairs)} sampled index pairs",
        ({"n": n, "m": m} for n, m in pairs),
        _eval_gcd,
    )


def sweep_addition(n_max: int = 80, m_max: int = 80) -> VerificationReport:
    return _equation_sweep(
        "addition",
        f"n in [1, {n_max}], m in [0, {m_max}]",
        ({"n": n, "m": m} for n in range(1, n_max + 1) for m in range(m_max + 1)),
        _eval_addition,
    )


def sweep_catalan(n_max: int = 80) -> VerificationReport:
    return _equation_sweep(
        "catalan",
        f"0 <= r <= n <= {n_max}",
        ({"n": n, "r": r} for n in range(n_max + 1) for r in range(n + 1)),
        _eval_catalan,
    )


def sweep_cassini(n_max: int = 120) -> VerificationReport:
    return _equation_sweep(
        "cassini",
        f"n in [1, {n_max}]",
        ({"n": n} for n in range(1, n_max + 1)),
        _eval_cassini,
    )


def sweep_square_lemma(k_max: int = 30) -> VerificationReport:
    return _equation_sweep(
        "square_lemma",
        f"k in [2, {k_max}], alpha in [0, k]",
        ({"k": k, "alpha": a} for k in range(2, k_max + 1) for a in range(k + 1)),
        _eval_square_lemma,
    )


def sweep_zero_positions(
    j_values: Iterable[int], e_values: Iterable[int], i_max_factor: int = 5
) -> VerificationReport:
    """Zero-position biconditional over a (j, e) grid, scanning i <= factor*j.

    j = 6 must not be in j_values; it has its own not_applicable outcome.
    """
    js = list(j_values)
    es = list(e_values)
    if 6 in js:
        raise OutOfDomainError("j = 6 is excluded from the biconditional sweep")
    domain = f"j in {{{min(js)}..{max(js)}}} minus 6, e in [{min(es)}, {max(es)}], i <= {i_max_factor}*j"
    cases = 0
    for j in js:
        for e in es:
            outcome = check_zero_positions(j, e, i_max_factor * j)
            cases += outcome.i_max + 1
            if outcome.verdict != ALL_PASS:
                w = outcome.witness if outcome.witness is not None else -1
                divisible = 1 if (w >= 0 and w % j == 0) else 0
                return VerificationReport(
                    "zero_positions",
                    domain,
                    cases,
                    COUNTEREXAMPLE,
                    # lhs: residue vanished at the witness, rhs: j | witness
                    Counterexample({"j": j, "e": e, "i": w}, 1 - divisible, divisible),
                )
    return VerificationReport("zero_positions", domain, cases, ALL_PASS)


def sweep_carmichael(
    j_lo: int = 3,
    j_hi: int = 40,
    expected_exceptions: Iterable[int] = (6, 12),
) -> VerificationReport:
    """Primitive prime existence over [j_lo, j_hi] against an exception set.

    The classical exception set for Fibonacci primitive divisors at j >= 3
    is {6, 12}: F_6 = 2^3 with 2 | F_3, and F_12 = 2^4 * 3^2 with 2 | F_3
    and 3 | F_4.  Every other j in range must yield a prime.
    """
    exceptions = set(expected_exceptions)
    domain = f"j in [{j_lo}, {j_hi}], expected exceptions {sorted(exceptions)}"
    cases = 0
    for j in range(j_lo, j_hi + 1):
        result = primitive_prime_divisor(j)
        cases += 1
        found = 1 if result.primitive_prime is not None else 0
        expected = 0 if j in exceptions else 1
        if found != expected:
            return VerificationReport(
                "carmichael",
                domain,
                cases,
                COUNTEREXAMPLE,
                Counterexample({"j": j}, found, expected),
            )
    return VerificationReport("carmichael", domain, cases, ALL_PASS)
