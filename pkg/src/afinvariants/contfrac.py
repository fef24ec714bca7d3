"""Continued fractions of rationals and real quadratic irrationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterator

from .errors import PreconditionViolated
from .exact import FieldElement, Number, compare


@dataclass(frozen=True)
class ContinuedFraction:
    """[a0; preperiod..., (period...)]; the period is empty for rationals."""

    integer_part: int
    preperiod: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if any(a < 1 for a in self.preperiod + self.period):
            raise ValueError("partial quotients after the first must be positive")
        if not self.period and self.preperiod and self.preperiod[-1] < 2:
            raise ValueError("rational expansions end in a partial quotient >= 2")

    def is_rational(self) -> bool:
        return not self.period

    def partial_quotients(self) -> Iterator[int]:
        """a1, a2, ... (finite for rationals, endless otherwise)."""
        yield from self.preperiod
        while self.period:
            yield from self.period

    def value(self) -> Fraction:
        if self.period:
            raise ValueError("infinite expansion has no rational value")
        x = None
        for a in reversed(self.preperiod):
            x = Fraction(a) if x is None else a + 1 / x
        return Fraction(self.integer_part) if x is None else self.integer_part + 1 / x

    def __str__(self) -> str:
        tail = [str(a) for a in self.preperiod]
        if self.period:
            tail.append("(" + ", ".join(str(a) for a in self.period) + ")")
        if not tail:
            return f"[{self.integer_part}]"
        return f"[{self.integer_part}; " + ", ".join(tail) + "]"


def cf_of_rational(x: Number) -> ContinuedFraction:
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    a0, r = divmod(p, q)
    terms = []
    p, q = q, r
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return ContinuedFraction(a0, tuple(terms))


def _surd_floor(p: int, q: int, d: int) -> int:
    """floor((p + sqrt(d)) / q) for nonsquare d > 0."""
    r = isqrt(d)
    return (p + r) // q if q > 0 else (p + r + 1) // q


def quadratic_cf(p: int, q: int, d: int) -> ContinuedFraction:
    """Expansion of (p + sqrt(d)) / q; requires q | d - p^2."""
    r = isqrt(d)
    if d <= 0 or r * r == d:
        raise PreconditionViolated("d must be a positive nonsquare")
    if q == 0 or (d - p * p) % q:
        raise PreconditionViolated("q must be nonzero and divide d - p^2")
    seen: dict[tuple[int, int], int] = {}
    terms = []
    while (p, q) not in seen:
        seen[(p, q)] = len(terms)
        a = _surd_floor(p, q, d)
        terms.append(a)
        p = a * q - p
        q = (d - p * p) // q
    start = seen[(p, q)]
    if start == 0:
        return ContinuedFraction(terms[0], (), tuple(terms[1:]) + (terms[0],))
    return ContinuedFraction(terms[0], tuple(terms[1:start]), tuple(terms[start:]))


def cf_of_quadratic(p: int, q: int, d: int) -> ContinuedFraction:
    """Expansion of a quadratic irrational (p + sqrt(d)) / q lying in (0, 1)."""
    r = isqrt(d)
    if d <= 0 or r * r == d:
        raise PreconditionViolated("d must be a positive nonsquare")
    if q == 0 or (d - p * p) % q:
        raise PreconditionViolated("q must be nonzero and divide d - p^2")
    if _surd_floor(p, q, d) != 0:
        raise PreconditionViolated("value must lie in (0, 1)")
    return quadratic_cf(p, q, d)


def quadratic_surd(x: FieldElement) -> tuple[int, int, int]:
    """(P, Q, D) with x = (P + sqrt(D)) / Q and Q | D - P^2, for irrational x
    in a quadratic field under its real embedding."""
    k = x.field
    if k.degree != 2:
        raise PreconditionViolated("quadratic field required")
    if x.is_rational():
        raise PreconditionViolated("element is rational")
    c, b, a = k.minpoly.coeffs
    disc = b * b - 4 * a * c
    # root = (-b + eps*sqrt(disc)) / (2a)
    eps = compare(k.root, Fraction(-b, 2 * a)) * (1 if a > 0 else -1)
    c0, c1 = x.coords
    big_x = c0 - c1 * Fraction(b, 2 * a)
    big_y = c1 * Fraction(eps, 2 * a)
    den = lcm(big_x.denominator, big_y.denominator)
    xn, yn = int(big_x * den), int(big_y * den)
    if yn < 0:
        xn, yn, den = -xn, -yn, -den
    pp, dd, qq = xn, yn * yn * disc, den
    if (dd - pp * pp) % qq:
        pp, dd, qq = pp * abs(qq), dd * qq * qq, qq * abs(qq)
    return pp, qq, dd
