"""Continued fractions of rationals and quadratic surds on the unit interval.

Digits follow the convention x = 1/(a_1 + 1/(a_2 + ...)), so every digit is
a positive integer, x = 0 has the empty expansion and x = 1 expands as [1].
Rationals have finite expansions, canonicalized so the last digit is >= 2
(using [..., a, 1] == [..., a+1]); quadratic surds have eventually periodic
expansions stored with minimal preperiod and period.
"""

from __future__ import annotations

from fractions import Fraction

from .digits import DigitSequence
from .errors import DomainError, InconclusiveError
from .exactnum import (
    QuadraticSurd,
    Value,
    _floor_triple,
    compare,
    mobius_apply,
    surd_normalize,
)

__all__ = [
    "ContinuedFraction",
    "canonicalize",
    "cf_eval",
    "cf_of_rational",
    "cf_of_surd",
    "cf_periodic_to_surd",
    "convergents",
    "shift_digits",
]

DEFAULT_STATE_CAP = 10**6


class ContinuedFraction(DigitSequence):
    """Continued-fraction digits; period nonempty iff the value is a surd."""


def cf_of_rational(x: Fraction | int) -> ContinuedFraction:
    """Canonical finite continued fraction of a rational in [0, 1]."""
    x = Fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"{x} is outside [0, 1]")
    digits: list[int] = []
    num, den = x.numerator, x.denominator
    while num:
        a, rem = divmod(den, num)
        digits.append(a)
        num, den = rem, num
    return ContinuedFraction(tuple(digits), ())


def cf_of_surd(
    x: QuadraticSurd, max_states: int = DEFAULT_STATE_CAP
) -> ContinuedFraction:
    """Eventually periodic continued fraction of a quadratic surd in (0, 1).

    Runs the classical (P, Q) state recursion with the discriminant held
    fixed; the first repeated state yields the minimal preperiod and period.
    The state cap guards against malformed inputs and raises instead of
    truncating silently.
    """
    if compare(x, 0) <= 0 or compare(x, 1) >= 0:
        raise DomainError(f"{x} is outside (0, 1)")
    d = x.d
    p, q = x.p, x.q
    digits: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    while len(seen) <= max_states:
        state = (p, q)
        if state in seen:
            start = seen[state]
            return ContinuedFraction(tuple(digits[:start]), tuple(digits[start:]))
        seen[state] = len(digits)
        # reciprocal: 1/x = (-p + sqrt(d)) / ((d - p*p)/q), exact by invariant
        q = (d - p * p) // q
        p = -p
        a = _floor_triple(p, d, q)
        digits.append(a)
        p -= a * q
    raise InconclusiveError(
        f"no repeated state within {max_states} steps; input is likely malformed"
    )


def canonicalize(cf: ContinuedFraction) -> ContinuedFraction:
    """Reduce a continued fraction to canonical form.

    Finite: merge a trailing 1 into the previous digit so the last digit is
    >= 2 (the one-digit expansion [1] of x = 1 stays).  Periodic: shrink the
    period to its minimal length, then absorb period digits that were
    duplicated at the end of the preperiod.
    """
    pre, per = cf.preperiod, cf.period
    if not per:
        while len(pre) >= 2 and pre[-1] == 1:
            pre = pre[:-2] + (pre[-2] + 1,)
        return ContinuedFraction(pre, ())
    for length in range(1, len(per) + 1):
        if len(per) % length == 0 and per == per[:length] * (len(per) // length):
            per = per[:length]
            break
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = (per[-1],) + per[:-1]
    return ContinuedFraction(pre, per)


def shift_digits(cf: ContinuedFraction) -> ContinuedFraction:
    """Drop the first digit, rotating the period when the preperiod is empty."""
    if cf.is_empty:
        raise DomainError("cannot shift an empty digit sequence")
    if cf.preperiod:
        return ContinuedFraction(cf.preperiod[1:], cf.period)
    return ContinuedFraction((), cf.period[1:] + cf.period[:1])


def convergents(cf: ContinuedFraction, n: int) -> list[Fraction]:
    """First n convergents p_k/q_k (all of them if the expansion is shorter)."""
    if n < 1:
        raise DomainError("need n >= 1 convergents")
    out: list[Fraction] = []
    p_prev, q_prev = 1, 0
    p_cur, q_cur = 0, 1
    for a in cf.first(n):
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        out.append(Fraction(p_cur, q_cur))
    return out


def cf_eval(cf: ContinuedFraction) -> Value:
    """Exact value of a continued fraction: Fraction when finite, surd when
    periodic."""
    if cf.period:
        return cf_periodic_to_surd(cf)
    p_prev, q_prev = 1, 0
    p_cur, q_cur = 0, 1
    for a in cf.preperiod:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    return Fraction(p_cur, q_cur)


def cf_periodic_to_surd(cf: ContinuedFraction) -> QuadraticSurd:
    """Exact quadratic surd with the given eventually periodic expansion.

    The purely periodic tail g solves the Moebius fixed-point equation
    q_{p-1} g^2 + (q_p - p_{p-1}) g - p_p = 0 built from the period's
    convergents; the root in (0, 1) is taken and the preperiod is applied as
    an exact Moebius transformation.
    """
    if not cf.period:
        raise DomainError("continued fraction has no period")
    p_prev, q_prev = 1, 0
    p_cur, q_cur = 0, 1
    for a in cf.period:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    # A g^2 + B g + C = 0 with one root in (0,1): A > 0, C = -p_p <= ... < 0
    quad_a = q_prev
    quad_b = q_cur - p_prev
    disc = quad_b * quad_b + 4 * quad_a * p_cur
    tail = surd_normalize(-quad_b, disc, 2 * quad_a)
    if not isinstance(tail, QuadraticSurd):
        raise DomainError("periodic expansion produced a rational value")
    if not cf.preperiod:
        return tail
    p_prev, q_prev = 1, 0
    p_cur, q_cur = 0, 1
    for a in cf.preperiod:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    value = mobius_apply(p_prev, p_cur, q_prev, q_cur, tail)
    if not isinstance(value, QuadraticSurd):
        raise DomainError("preperiod transform produced a rational value")
    return value
