"""Exact big-integer inequality engine for the prime-dimension case analysis.

Every check is integer arithmetic.  The two inequality cases that involve
log2 terms (the projective-linear socle cases) are evaluated in the
exponent domain with fixed-point dyadic upper bounds on the logarithms:
``log2 x <= ceil(2^f log2 x) / 2^f``, computed exactly via one big-integer
power.  Rounding is always outward, so whenever a verdict says "holds"
the underlying real inequality holds; the reported thresholds can exceed
the true crossover by at most the rounding granularity (2^-12 here keeps
them within a few primes).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from ._primes import ceil_log2, floor_log2, is_prime, pow2_at_least, prime_power, prime_powers_upto, primes_upto
from .errors import HorizonTooSmall, InvalidCase, NotOddPrime, NotPrimePower

LOG_FRAC_BITS = 12
CASES = ("II.i", "II.ii", "III.i", "III.ii")


def log2_fixed_upper(x: int, frac_bits: int = LOG_FRAC_BITS) -> int:
    """Smallest k with k / 2^frac_bits >= log2(x), for x >= 1."""
    if x < 1:
        raise ValueError("log2 of a nonpositive integer")
    if x == 1:
        return 0
    return ceil_log2(x ** (1 << frac_bits))


def log2_fixed_lower(x: int, frac_bits: int = LOG_FRAC_BITS) -> int:
    """Largest k with k / 2^frac_bits <= log2(x), for x >= 1."""
    if x < 1:
        raise ValueError("log2 of a nonpositive integer")
    return floor_log2(x ** (1 << frac_bits))


@dataclass(frozen=True)
class BoundVerdict:
    """One row of an inequality case analysis.

    ``holds`` is True iff lhs >= rhs.  For the exponent-domain cases the
    sides are the scaled integer exponents being compared (scale recorded
    in ``scale_bits``); for the pure-integer cases they are the actual
    quantities.
    """

    label: str
    params: dict
    lhs: int
    rhs: int
    holds: bool
    scale_bits: int = 0


def psl_order(m: int, q: int) -> int:
    """Order of the projective special linear group PSL_m(q), exact."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if prime_power(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    prod = 1
    for i in range(2, m + 1):
        prod *= q**i - 1
    return q ** (m * (m - 1) // 2) * prod // gcd(m, q - 1)


class LemmaCheck(NamedTuple):
    hypothesis: bool
    conclusion: bool
    implication_ok: bool


def check_numerical_lemma(a: int, c: int, b: int) -> LemmaCheck:
    """The doubling lemma: b >= a and 2^a >= a c imply 2^b >= b c."""
    if min(a, b, c) < 1:
        raise ValueError("arguments must be positive")
    hyp = b >= a and pow2_at_least(a, a * c)
    concl = pow2_at_least(b, b * c)
    return LemmaCheck(hyp, concl, (not hyp) or concl)


def _require_odd_prime(p: int):
    if p < 3 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def prime_case_check(p: int, a: int, ell: int, case: str) -> BoundVerdict:
    """One inequality of the prime-dimension case analysis.

    Case II covers metacyclic permutation images, case III projective
    socles; subcase .i takes ell <= a-1 (with ell = a-1 the worst case),
    subcase .ii takes ell = a.  Cases II.i and III.i require a | p - 1.
    """
    _require_odd_prime(p)
    if case not in CASES:
        raise InvalidCase(f"unknown case {case!r}")
    if a < 1:
        raise ValueError("a must be positive")
    params = {"p": p, "a": a, "ell": ell}
    if case == "II.i":
        if not 0 <= ell <= a - 1:
            raise InvalidCase("case II.i needs 0 <= ell <= a-1")
        if (p - 1) % a != 0:
            raise InvalidCase("case II.i needs a | p-1")
        lhs = 2**p
        rhs = 2 ** (ell * (p - 1) // a + 1) * p * p * (p - 1)
        return BoundVerdict("II.i", params, lhs, rhs, lhs >= rhs)
    if case == "II.ii":
        if ell != a:
            raise InvalidCase("case II.ii is the ell = a subcase")
        lhs = 2**p
        rhs = a * 2 ** (2 * p // 3) * p * (p - 1)
        return BoundVerdict("II.ii", params, lhs, rhs, lhs >= rhs)
    # case III: exponent domain with outward-rounded logs, scale 2^(2f)
    f = LOG_FRAC_BITS
    ku = log2_fixed_upper(p * p + 1, f)  # >= 2^f log2(p^2+1)
    kw = log2_fixed_upper(p, f)  # >= 2^f log2 p
    # log2(log2 p) <= log2(kw / 2^f) = log2(kw) - f, rounded up
    kv = log2_fixed_upper(kw, f) - (f << f)
    if case == "III.i":
        if not 0 <= ell <= a - 1:
            raise InvalidCase("case III.i needs 0 <= ell <= a-1")
        if (p - 1) % a != 0:
            raise InvalidCase("case III.i needs a | p-1")
        lhs = ((p - 1) // a) << (2 * f)
        rhs = ku * ku + (kv << f) + (kw << f)
        return BoundVerdict("III.i", params, lhs, rhs, lhs >= rhs, scale_bits=2 * f)
    if ell != a:
        raise InvalidCase("case III.ii is the ell = a subcase")
    ka = log2_fixed_upper(a, f) if a > 1 else 0
    lhs = p << (2 * f)
    rhs = 3 * ((ka << f) + ku * ku + (kv << f))
    return BoundVerdict("III.ii", params, lhs, rhs, lhs >= rhs, scale_bits=2 * f)


def _default_ell(a: int, case: str) -> int:
    return a - 1 if case.endswith(".i") else a


@dataclass(frozen=True)
class ThresholdReport:
    case: str
    a: int
    threshold: int  # smallest prime from which the inequality holds up to horizon
    horizon: int
    anomalies: tuple[int, ...]  # primes below threshold where it nevertheless holds


def min_threshold(a: int, case: str, horizon: int = 10007) -> ThresholdReport:
    """Smallest prime P such that the case inequality holds for every prime
    in [P, horizon]; primes below P that hold anyway are reported, not hidden.
    """
    if case not in CASES:
        raise InvalidCase(f"unknown case {case!r}")
    ell = _default_ell(a, case)
    verdicts = []
    for p in primes_upto(horizon):
        if p == 2:
            continue
        if case.endswith(".i") and (p - 1) % a != 0:
            continue
        verdicts.append((p, prime_case_check(p, a, ell, case).holds))
    if not verdicts or not verdicts[-1][1]:
        raise HorizonTooSmall(f"inequality does not hold at the horizon {horizon}")
    threshold = None
    for p, ok in reversed(verdicts):
        if not ok:
            break
        threshold = p
    anomalies = tuple(p for p, ok in verdicts if ok and p < threshold)
    return ThresholdReport(case, a, threshold, horizon, anomalies)


def mon_metacyclic_bound(p: int, ell: int, a: int) -> BoundVerdict:
    """Metacyclic-image bound: 2^{ell(p-1)/a + 1} p^2 (p-1) against 2^p."""
    _require_odd_prime(p)
    if (p - 1) % a != 0:
        raise ValueError("a must divide p - 1")
    if not 0 <= ell <= a:
        raise ValueError("ell out of range")
    lhs = 2**p
    rhs = 2 ** (ell * (p - 1) // a + 1) * p * p * (p - 1)
    return BoundVerdict("metacyclic", {"p": p, "ell": ell, "a": a}, lhs, rhs, lhs >= rhs)


@dataclass(frozen=True)
class PrimeOfForm:
    p: int
    q: int
    m: int


def prime_of_form(q_max: int, m_max: int) -> list[PrimeOfForm]:
    """All primes p = (q^m - 1)/(q - 1) with q <= q_max a prime power, m >= 2."""
    if q_max < 2 or m_max < 2:
        raise ValueError("bounds must be at least 2")
    out = []
    for q in prime_powers_upto(q_max):
        for m in range(2, m_max + 1):
            p = (q**m - 1) // (q - 1)
            if is_prime(p):
                out.append(PrimeOfForm(p, q, m))
    out.sort(key=lambda t: (t.p, t.q, t.m))
    return out
