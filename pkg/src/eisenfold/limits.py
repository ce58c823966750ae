"""Asymptotics of the isoperimetric ratio along continued-fraction approximants.

For the golden aspect the fold and face counts have Fibonacci closed forms;
for a general quadratic irrational zeta the limiting ratio is recovered
numerically but exactly: expand eta of two deep rational approximants,
keep the agreeing prefix of the continued fractions, detect a repeating
tail, and reconstruct the quadratic surd it determines.  Detection is
conservative (two depths, three full repeats, safety margin) and failure
raises rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .eisenstein import DomainError, continued_fraction_euclid
from .flower import cf_eta, cf_face_count, cf_fold_count
from .surd import CFExpansion, QuadraticSurd, periodic_cf_of_surd, smallest_shift_period, surd_from_periodic_cf

DEFAULT_DEPTH_SCHEDULE = ((40, 60), (150, 200), (400, 500), (1200, 1500))


class UndeterminedError(RuntimeError):
    """No stable period emerged within the depth schedule."""


def _fibs(n: int) -> list[int]:
    out = [1, 1]
    while len(out) < n:
        out.append(out[-1] + out[-2])
    return out[:n]


def fib_fold_count(n: int) -> int:
    """Closed form -1 + 2 * sum(a_1..a_{n+2}) for the golden-aspect coloring."""
    if n < 2:
        raise DomainError("defined for n >= 2")
    return -1 + 2 * sum(_fibs(n + 2))


def fib_face_count(n: int) -> int:
    """Closed form 2 + 4 * sum(a_k * a_{k+1}, k=1..n)."""
    if n < 2:
        raise DomainError("defined for n >= 2")
    a = _fibs(n + 1)
    return 2 + 4 * sum(a[k] * a[k + 1] for k in range(n))


def golden_zeta() -> QuadraticSurd:
    """(sqrt(5) - 1) / 2, the reciprocal golden ratio."""
    return QuadraticSurd(Fraction(-1, 2), Fraction(1, 2), 5)


def sqrt_zeta(n: int) -> QuadraticSurd:
    """sqrt(n) - floor(sqrt(n)), normalized to a squarefree radicand."""
    if n < 2:
        raise DomainError("need n >= 2")
    f = isqrt(n)
    if f * f == n:
        raise DomainError(f"{n} is a perfect square")
    return QuadraticSurd.make(Fraction(-f), Fraction(1), n)


def parse_zeta(text: str) -> QuadraticSurd:
    """CLI surd syntax: 'golden' or 'sqrt:N' (the fractional part of sqrt(N))."""
    if text == "golden":
        return golden_zeta()
    if text.startswith("sqrt:"):
        return sqrt_zeta(int(text[5:]))
    raise DomainError(f"unrecognized zeta syntax {text!r}")


def _term_stream(e: CFExpansion):
    yield from e.preperiod
    while True:
        yield from e.period


def approximant(zeta: QuadraticSurd, min_denominator: int) -> Fraction:
    """First continued-fraction convergent of zeta with denominator >= bound."""
    h, h1 = 1, 0
    k, k1 = 0, 1
    for t in _term_stream(periodic_cf_of_surd(zeta)):
        h, h1 = t * h + h1, h
        k, k1 = t * k + k1, k
        if h > 0 and k >= min_denominator:
            return Fraction(h, k)
    raise AssertionError("unreachable")


def convergents(zeta: QuadraticSurd, count: int) -> list[Fraction]:
    """The first `count` nonzero convergents; for the golden aspect the n-th
    (1-based) is the Fibonacci ratio a_n / a_{n+1}."""
    out = []
    h, h1 = 1, 0
    k, k1 = 0, 1
    for t in _term_stream(periodic_cf_of_surd(zeta)):
        h, h1 = t * h + h1, h
        k, k1 = t * k + k1, k
        if h > 0:
            out.append(Fraction(h, k))
            if len(out) == count:
                return out
    raise AssertionError("unreachable")


def eta_of_approximant(p: int, q: int) -> Fraction:
    """Exact eta of the continued-fraction coloring indexed by p + q*alpha."""
    if gcd(p, q) != 1 or not (1 <= p <= q):
        raise DomainError(f"approximant must be reduced with 1 <= p <= q, got {p}/{q}")
    return cf_eta(p, q)


@dataclass(frozen=True)
class EtaLimitResult:
    zeta: QuadraticSurd
    surd: QuadraticSurd
    expansion: CFExpansion
    depths_used: tuple[int, int]
    prefix_length: int


def eta_limit_numeric(
    zeta: QuadraticSurd,
    depth_schedule: tuple[tuple[int, int], ...] = DEFAULT_DEPTH_SCHEDULE,
) -> EtaLimitResult:
    """Limit of eta along zeta's approximants, reconstructed as an exact surd.

    Two approximants with denominators near 10^d1 and 10^d2 are expanded;
    the common continued-fraction prefix (minus a 5-term safety margin)
    must contain at least three full repeats of a candidate period, the
    reconstruction must land in Q(sqrt(d)), and re-expanding the
    reconstructed surd must reproduce the whole trimmed prefix.  Raises
    UndeterminedError when no rung of the schedule satisfies all checks.
    """
    if zeta.is_rational() or not (QuadraticSurd(Fraction(0), Fraction(0), 1) < zeta < 1):
        raise DomainError("zeta must be a quadratic irrational in (0, 1)")
    for d1, d2 in depth_schedule:
        expansions = []
        for digits in (d1, d2):
            r = approximant(zeta, 10 ** digits)
            e = eta_of_approximant(r.numerator, r.denominator)
            expansions.append(continued_fraction_euclid(e.numerator, e.denominator))
        m = 0
        limit = min(len(e) for e in expansions)
        while m < limit and expansions[0][m] == expansions[1][m]:
            m += 1
        prefix = expansions[0][: max(0, m - 5)]
        hit = _detect_period(prefix)
        if hit is None:
            continue
        start, period = hit
        try:
            surd = surd_from_periodic_cf(
                CFExpansion(tuple(prefix[:start]), tuple(period)), known_radicand=zeta.d
            )
        except DomainError:
            continue
        regenerated = periodic_cf_of_surd(surd).terms(len(prefix))
        if regenerated != prefix:
            continue
        return EtaLimitResult(
            zeta=zeta,
            surd=surd,
            expansion=CFExpansion(tuple(prefix[:start]), tuple(period)),
            depths_used=(d1, d2),
            prefix_length=len(prefix),
        )
    raise UndeterminedError(
        f"no stable period for zeta={zeta} within schedule {depth_schedule}"
    )


def _detect_period(terms: list[int]):
    """Smallest (start, period) with >= 3 full repeats filling the suffix."""
    n = len(terms)
    for start in range(n - 2):
        suffix = terms[start:]
        p = smallest_shift_period(suffix)
        if p and len(suffix) >= 3 * p:
            return start, suffix[:p]
    return None


@dataclass(frozen=True)
class ScanRow:
    n: int
    p: int
    q: int
    fold: int
    faces: int
    fold_ratio: Fraction
    eta_ratio: Fraction


def ratio_scan(zeta: QuadraticSurd, n_max: int) -> list[ScanRow]:
    """Exact per-approximant fold and eta ratios for convergence inspection.

    Row n uses the n-th continued-fraction convergent of zeta; for the
    golden aspect that is the pair of consecutive Fibonacci numbers
    (a_n, a_{n+1}).
    """
    rows = []
    for n, r in enumerate(convergents(zeta, n_max), start=1):
        p, q = r.numerator, r.denominator
        f = cf_fold_count(p, q)
        faces = cf_face_count(p, q)
        rows.append(
            ScanRow(n, p, q, f, faces, Fraction(f, faces), Fraction(f * f, faces))
        )
    return rows
