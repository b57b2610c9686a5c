"""Exact numeric substrate: arbitrary-precision rationals and quadratic surds.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored reduced with a positive denominator.  Quadratic surds are triples
``(p + sqrt(d))/q`` of integers kept in the normal form the
continued-fraction machinery needs: ``d`` positive and not a perfect square,
``q`` nonzero, and ``q`` dividing ``d - p*p``.  Values that need ``-sqrt(d)``
are represented by negating ``p`` and ``q`` together.

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError

__all__ = [
    "QuadraticSurd",
    "Value",
    "compare",
    "decimal_str",
    "floor_value",
    "format_value",
    "isqrt",
    "mobius_apply",
    "parse_value",
    "rat_arith",
    "surd_floor",
    "surd_normalize",
]


def isqrt(n: int) -> int:
    """Exact integer square root: the largest s with s*s <= n."""
    if n < 0:
        raise DomainError("isqrt of a negative integer")
    return math.isqrt(n)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _floor_triple(p: int, d: int, q: int) -> int:
    # floor((p + sqrt(d))/q) for nonsquare d > 0 and q != 0.  With
    # m = p + isqrt(d) the value lies strictly inside (m, m+1)/q, an open
    # interval that contains no integer multiple of 1/q, so the floor of the
    # midpoint (2m+1)/(2q) is the floor of the value for either sign of q.
    m = p + math.isqrt(d)
    return (2 * m + 1) // (2 * q)


def _sign_linear(u: int, w: int, d: int) -> int:
    # sign of u + w*sqrt(d) for nonsquare d > 0
    if w == 0:
        return _sign(u)
    if u == 0:
        return _sign(w)
    if u > 0 and w > 0:
        return 1
    if u < 0 and w < 0:
        return -1
    uu, wwd = u * u, w * w * d
    if u > 0:  # w < 0: positive iff u exceeds |w|*sqrt(d)
        return _sign(uu - wwd)
    return _sign(wwd - uu)  # u < 0 < w


_TRIAL_BOUND = 10_000


def _square_content(g: int, d: int) -> int:
    """A large f >= 1 dividing g with f*f dividing d.

    Best-effort: trial division stops at a fixed bound so huge common
    factors never stall; surd equality does not depend on full reduction.
    """
    g = abs(g)
    f = 1
    p = 2
    while p * p <= g and p <= _TRIAL_BOUND:
        if g % p == 0:
            e = 0
            while g % p == 0:
                g //= p
                e += 1
            while e > 0 and d % (p * p) == 0:
                f *= p
                d //= p * p
                e -= 1
        p += 1 if p == 2 else 2
    if g > 1 and d % (g * g) == 0:  # covers a prime or untried leftover
        f *= g
    return f


@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The real algebraic number (p + sqrt(d))/q of degree exactly 2.

    Invariants: d > 0 and not a perfect square, q != 0, and q | d - p*p.
    Build instances through :func:`surd_normalize`, which rescales arbitrary
    integer triples into this form (or collapses them to a Fraction when d
    is a perfect square).
    """

    p: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if self.q == 0:
            raise DomainError("surd denominator q must be nonzero")
        if self.d <= 0:
            raise DomainError("surd radicand d must be positive")
        s = math.isqrt(self.d)
        if s * s == self.d:
            raise DomainError(
                f"radicand {self.d} is a perfect square; the value is rational"
            )
        if (self.d - self.p * self.p) % self.q:
            raise DomainError("surd triple violates q | d - p*p; use surd_normalize")

    def min_poly_key(self) -> tuple[int, int, int, int]:
        """Reduced minimal polynomial (A, B, C) of the value plus the root
        branch (sign of q), a complete invariant for value equality."""
        a = self.q * self.q
        b = -2 * self.p * self.q
        c = self.p * self.p - self.d
        g = math.gcd(math.gcd(a, b), c)
        return (a // g, b // g, c // g, _sign(self.q))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticSurd):
            return self.min_poly_key() == other.min_poly_key()
        if isinstance(other, (int, Fraction)):
            return False  # a valid surd is irrational
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.min_poly_key())

    def __float__(self) -> float:
        scaled = Fraction(math.isqrt(self.d << 128), 1 << 64)
        return float((self.p + scaled) / self.q)

    def __str__(self) -> str:
        return format_value(self)

    def __repr__(self) -> str:
        return f"QuadraticSurd(p={self.p}, d={self.d}, q={self.q})"


Value = Fraction | QuadraticSurd


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Exact rational arithmetic; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError("rational division by zero")
        return a / b
    raise DomainError(f"unknown rational operation {op!r}")


def surd_normalize(p: int, d: int, q: int) -> Value:
    """Build the value (p + sqrt(d))/q in normal form.

    Returns a Fraction when d is a perfect square, otherwise a
    QuadraticSurd with common content removed and the triple rescaled so
    that q divides d - p*p.  The represented value is unchanged.
    """
    if q == 0:
        raise DomainError("surd denominator q must be nonzero")
    if d < 0:
        raise DomainError("surd radicand d must be nonnegative")
    s = math.isqrt(d)
    if s * s == d:
        return Fraction(p + s, q)
    f = _square_content(math.gcd(p, q), d)
    if f > 1:
        p //= f
        d //= f * f
        q //= f
    if (d - p * p) % q:
        a = abs(q)
        p *= a
        d *= a * a
        q *= a
    return QuadraticSurd(p, d, q)


def surd_floor(x: QuadraticSurd) -> int:
    """Exact floor of a quadratic surd."""
    return _floor_triple(x.p, x.d, x.q)


def floor_value(x: Value) -> int:
    """Exact floor of a rational or quadratic surd."""
    if isinstance(x, QuadraticSurd):
        return surd_floor(x)
    return x.numerator // x.denominator


def scaled_floor(x: Value, bits: int) -> int:
    """floor(x * 2**bits), exactly."""
    if isinstance(x, QuadraticSurd):
        return _floor_triple(x.p << bits, x.d << (2 * bits), x.q)
    y = x * (1 << bits)
    return y.numerator // y.denominator


def _compare_surd_fraction(x: QuadraticSurd, y: Fraction) -> int:
    # x - y = (u + w*sqrt(d)) / (q*b) with b = den(y) > 0
    u = x.p * y.denominator - y.numerator * x.q
    w = y.denominator
    return _sign_linear(u, w, x.d) * _sign(x.q)


def compare(x: Value | int, y: Value | int) -> int:
    """Exact trichotomy: -1, 0, or 1 as x <, ==, > y.

    Rational-vs-surd comparisons isolate the radical and square with sign
    tracking; surd-vs-surd comparisons test value equality through the
    minimal polynomial and otherwise separate the values by refining exact
    dyadic enclosures.
    """
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(y, int):
        y = Fraction(y)
    x_surd = isinstance(x, QuadraticSurd)
    y_surd = isinstance(y, QuadraticSurd)
    if not x_surd and not y_surd:
        return _sign(x.numerator * y.denominator - y.numerator * x.denominator)
    if x_surd and not y_surd:
        return _compare_surd_fraction(x, y)
    if y_surd and not x_surd:
        return -_compare_surd_fraction(y, x)
    if x.min_poly_key() == y.min_poly_key():
        return 0
    bits = 32
    while True:
        xf = scaled_floor(x, bits)
        yf = scaled_floor(y, bits)
        if xf > yf:
            return 1
        if xf < yf:
            return -1
        bits *= 2  # enclosures overlap; unequal values must separate


def mobius_apply(a: int, b: int, c: int, e: int, x: QuadraticSurd) -> Value:
    """Exact image of x under t -> (a*t + b)/(c*t + e), integer coefficients."""
    num_r = a * x.p + b * x.q
    den_r = c * x.p + e * x.q
    w = den_r * den_r - c * c * x.d
    if w == 0:
        raise DomainError("Moebius transform has a pole at this surd")
    u = num_r * den_r - a * c * x.d
    v = (a * e - b * c) * x.q
    if v == 0:
        return Fraction(u, w)  # degenerate map is constant and rational
    sgn = 1 if v > 0 else -1
    return surd_normalize(u * sgn, v * v * x.d, w * sgn)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")
_SURD_RE = re.compile(
    r"^\(?\s*(?:(?P<p>[+-]?\d+)\s*(?P<sgn>[+-])\s*)?"
    r"sqrt\(\s*(?P<d>\d+)\s*\)"
    r"(?:\s*(?P<sgn2>[+-])\s*(?P<p2>\d+))?\s*\)?"
    r"(?:\s*/\s*(?P<q>[+-]?\d+))?$"
)


def parse_value(text: str) -> Value:
    """Parse "num/den" rationals and "(p+sqrt(d))/q" surd literals.

    Both ASCII '-' and the minus sign U+2212 are accepted.  Surds may also
    be written sqrt-first, e.g. "(sqrt(5)-1)/2", or without the /q part.
    """
    s = text.strip().replace("−", "-")
    if _RATIONAL_RE.match(s):
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}") from None
    m = _SURD_RE.match(s)
    if m and (m.group("p") is None or m.group("p2") is None):
        d = int(m.group("d"))
        q = int(m.group("q") or 1)
        radical_sign = 1
        if m.group("p") is not None:
            p = int(m.group("p"))
            if m.group("sgn") == "-":
                radical_sign = -1
        elif m.group("p2") is not None:
            p = int(m.group("p2"))
            if m.group("sgn2") == "-":
                p = -p
        else:
            p = 0
        if q == 0:
            raise ParseError(f"zero denominator in {text!r}")
        if radical_sign < 0:  # (p - sqrt(d))/q == (-p + sqrt(d))/(-q)
            p, q = -p, -q
        return surd_normalize(p, d, q)
    raise ParseError(f"cannot parse value literal {text!r}")


def format_value(x: Value) -> str:
    """Render a value in the grammar parse_value accepts."""
    if isinstance(x, QuadraticSurd):
        if x.q > 0:
            return f"({x.p}+sqrt({x.d}))/{x.q}"
        return f"({-x.p}-sqrt({x.d}))/{-x.q}"
    return str(x)


def _fraction_decimal(x: Fraction, digits: int) -> str:
    sign = "-" if x < 0 else ""
    n, d = abs(x.numerator), x.denominator
    scaled, rem = divmod(n * 10**digits, d)
    if 2 * rem > d or (2 * rem == d and scaled % 2):
        scaled += 1  # round to nearest, ties to even
    whole, frac = divmod(scaled, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def decimal_str(x: Value, digits: int = 30) -> str:
    """Decimal rendering of an exact value, correctly rounded to `digits`
    places (surds are first approximated well below the rounding scale)."""
    if digits < 0:
        raise DomainError("digits must be nonnegative")
    if isinstance(x, QuadraticSurd):
        k = 10 ** (digits + 8)
        approx = Fraction(x.p * k + math.isqrt(x.d * k * k), x.q * k)
        return _fraction_decimal(approx, digits)
    return _fraction_decimal(x, digits)
