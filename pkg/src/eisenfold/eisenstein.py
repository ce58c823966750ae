"""Exact arithmetic on Eisenstein integers and the slow Gauss map.

The lattice element alpha = (1 + i*sqrt(3))/2 is a primitive sixth root of
unity satisfying alpha^2 = alpha - 1.  Everything downstream (triangle
anchors, necklace vertices, hexagon corners) is expressed in the integer
basis (1, alpha), so all geometry stays in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class DomainError(ValueError):
    """Raised when an argument is outside an operation's domain."""


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    """Lattice point a + b*alpha with norm a^2 + ab + b^2."""

    a: int
    b: int

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt | int) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        # (a + b alpha)(c + d alpha) with alpha^2 = alpha - 1
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> EisensteinInt:
        """Complex conjugate: a + b*alpha -> (a + b) - b*alpha."""
        return EisensteinInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}α"


ONE = EisensteinInt(1, 0)
ALPHA = EisensteinInt(0, 1)
OMEGA = EisensteinInt(-1, 1)  # alpha^2, the order-3 rotation

UNITS = (
    EisensteinInt(1, 0),
    EisensteinInt(0, 1),
    EisensteinInt(-1, 1),
    EisensteinInt(-1, 0),
    EisensteinInt(0, -1),
    EisensteinInt(1, -1),
)


def mul(z: EisensteinInt, w: EisensteinInt) -> EisensteinInt:
    """Ring product; the norm is multiplicative."""
    return z * w


def is_primitive(z: EisensteinInt) -> bool:
    """True iff z is not a proper integer multiple of a lattice point."""
    if z.is_zero():
        raise DomainError("0 is neither primitive nor imprimitive")
    return gcd(z.a, z.b) == 1


def canonicalize(z: EisensteinInt) -> tuple[int, int]:
    """Unique orbit representative (a, b) with 0 <= a <= b.

    The orbit is taken under the 12-element group generated by the six
    units and complex conjugation; exactly one member lies in the closed
    30-degree wedge 0 <= a <= b.
    """
    if z.is_zero():
        raise DomainError("cannot canonicalize 0")
    hits = set()
    for w in (z, z.conj()):
        for _ in range(6):
            if 0 <= w.a <= w.b:
                hits.add((w.a, w.b))
            w = w * ALPHA
    if len(hits) != 1:
        raise AssertionError(f"orbit of {z} has {len(hits)} wedge members")
    return hits.pop()


def canonical(z: EisensteinInt) -> EisensteinInt:
    a, b = canonicalize(z)
    return EisensteinInt(a, b)


# ---------------------------------------------------------------------------
# Rationals in (0, 1] and the slow Gauss map.
#
# fractions.Fraction already guarantees the reduced-positive-denominator
# invariants wanted of an aspect ratio, so it is used directly.


def _check_unit_interval(r: Fraction, *, allow_one: bool) -> None:
    if r <= 0:
        raise DomainError(f"{r} is not positive")
    if r > 1 or (r == 1 and not allow_one):
        raise DomainError(f"{r} is outside the domain")


def slow_gauss(r: Fraction) -> Fraction:
    """Send r in (0,1) to whichever of 1/r - 1 and its reciprocal is in (0,1].

    Equivalently a/(a+b) and b/(a+b) both map to a/b (with a <= b).
    """
    _check_unit_interval(r, allow_one=False)
    p, q = r.numerator, r.denominator
    lo, hi = min(p, q - p), max(p, q - p)
    return Fraction(lo, hi)


def g_sequence(r: Fraction) -> list[Fraction]:
    """The slow-Gauss orbit of r down to 1/1, listed in reverse.

    Starts at 1/1 and ends at r; numerators are monotone non-decreasing
    along the list because each orbit step can only shrink the numerator.
    """
    _check_unit_interval(r, allow_one=True)
    orbit = [r]
    while orbit[-1] != 1:
        orbit.append(slow_gauss(orbit[-1]))
    orbit.reverse()
    return orbit


def gauss_star(r: Fraction) -> Fraction:
    """Traditional Gauss map q/p - floor(q/p) of r = p/q."""
    _check_unit_interval(r, allow_one=False)
    p, q = r.numerator, r.denominator
    return Fraction(q % p, p)


def comparison_exponent(r: Fraction) -> int:
    """Smallest k with gamma^k(r) = gauss_star(r).

    gauss_star of an integer reciprocal 1/n is 0, which the slow map never
    attains; the orbit is declared terminal at 1/1 instead, giving 1/n the
    exponent n - 1 (so comparison_exponent(1/2) = 1).
    """
    _check_unit_interval(r, allow_one=False)
    target = gauss_star(r)
    if target == 0:
        target = Fraction(1)
    k, cur = 0, r
    while cur != target:
        cur = slow_gauss(cur)
        k += 1
    return k


def continued_fraction(r: Fraction) -> list[int]:
    """Canonical partial quotients [0; a1, ..., am] of r in (0, 1].

    Recorded by walking the gauss_star orbit and logging comparison
    exponents; the terminal integer reciprocal 1/n contributes n.  The
    canonical form has final quotient >= 2, except continued_fraction(1)
    which is [1].
    """
    _check_unit_interval(r, allow_one=True)
    if r == 1:
        return [1]
    quotients = [0]
    cur = r
    while True:
        if cur.numerator == 1:
            quotients.append(cur.denominator)
            return quotients
        quotients.append(comparison_exponent(cur))
        cur = gauss_star(cur)


def continued_fraction_euclid(p: int, q: int) -> list[int]:
    """Euclidean-algorithm oracle for continued_fraction, canonical form."""
    if p <= 0 or q <= 0:
        raise DomainError("needs a positive rational")
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    if len(out) > 1 and out[-1] == 1:
        out.pop()
        out[-1] += 1
    return out


def evaluate_continued_fraction(terms: list[int]) -> Fraction:
    value = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        value = t + 1 / value
    return value


def tree_children(r: Fraction) -> tuple[Fraction, Fraction]:
    """Children a/(a+b) and b/(a+b) of r = a/b in the rational tree.

    slow_gauss of either child returns r; the root 1/1 has the collapsed
    single child 1/2 (returned twice).
    """
    _check_unit_interval(r, allow_one=True)
    a, b = r.numerator, r.denominator
    return Fraction(a, a + b), Fraction(b, a + b)
