"""Generalized question-mark functions: exact evaluation and inversion.

For a partition with points t_j, the value at x with continued fraction
digits a_1, a_2, ... is the alternating series

    t(a_1) - D(a_1) t(a_2) + D(a_1) D(a_2) t(a_3) - ...

where D(j) = t(j) - t(j+1) is the j-th branch length.  Finite expansions
(rationals) give finite sums; eventually periodic expansions (quadratic
surds) are summed in closed form through the geometric tail

    S(pre) + (-1)^m P(pre) * S(per) / (1 - (-1)^p P(per)),

with S and P the alternating sum and the length product of a digit block,
m and p the block lengths.  The dyadic partition reproduces the classical
Minkowski question-mark function, for which an independent Farey-mediant
oracle is provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .contfrac import ContinuedFraction, cf_eval, cf_of_rational, cf_of_surd
from .digits import DigitSequence
from .errors import DomainError, InconclusiveError, PrecisionError
from .exactnum import QuadraticSurd, Value, compare, scaled_floor
from .partition import Partition

__all__ = [
    "ApproxValue",
    "BlockSummary",
    "LurothDigits",
    "block_summary",
    "luroth_digits_of",
    "luroth_series_eval",
    "mediant_oracle",
    "q_eval",
    "q_eval_rational",
    "q_eval_real",
    "q_eval_surd",
    "q_inverse_rational",
]

DEFAULT_ORBIT_CAP = 10_000


class LurothDigits(DigitSequence):
    """Luroth expansion digits; finite iff the orbit of the point hits 0."""


@dataclass(frozen=True)
class BlockSummary:
    """Alternating sum S and branch-length product P of a finite digit block."""

    sum: Fraction
    product: Fraction
    length: int


def block_summary(part: Partition, block: Sequence[int]) -> BlockSummary:
    """Exact S and P of a finite digit block."""
    total = Fraction(0)
    product = Fraction(1)
    sign = 1
    for a in block:
        if a < 1:
            raise DomainError(f"digits must be positive integers, got {a!r}")
        total += sign * product * part.t(a)
        product *= part.delta(a)
        sign = -sign
    return BlockSummary(total, product, len(block))


def _periodic_sum(part: Partition, pre: Sequence[int], per: Sequence[int]) -> Fraction:
    """Closed form of the series over the digits pre + per + per + ..."""
    head = block_summary(part, pre)
    cycle = block_summary(part, per)
    sign_head = -1 if head.length % 2 else 1
    sign_cycle = -1 if cycle.length % 2 else 1
    denom = 1 - sign_cycle * cycle.product  # |P(per)| < 1, so never zero
    return head.sum + sign_head * head.product * cycle.sum / denom


def q_eval_rational(part: Partition, x: Fraction | int) -> Fraction:
    """Exact value at a rational in [0, 1]: the finite alternating sum over
    the canonical continued fraction."""
    return block_summary(part, cf_of_rational(x).preperiod).sum


def q_eval_surd(part: Partition, x: QuadraticSurd) -> Fraction:
    """Exact rational value at a quadratic surd in (0, 1), by closed-form
    summation of the eventually periodic series."""
    cf = cf_of_surd(x)
    return _periodic_sum(part, cf.preperiod, cf.period)


def q_eval(part: Partition, x: Value) -> Fraction:
    """Exact value at a rational or quadratic surd."""
    if isinstance(x, QuadraticSurd):
        return q_eval_surd(part, x)
    return q_eval_rational(part, x)


class ApproxValue(NamedTuple):
    """A truncated-series value with a proven bound on the truncation error."""

    value: Fraction
    bound: Fraction


def q_eval_real(
    part: Partition,
    x: Value | float | str,
    tol: Fraction | float,
    *,
    precision: int = 256,
    max_digits: int = 200,
) -> ApproxValue:
    """Series-truncation evaluation with a certified error bound.

    Continued-fraction digits are extracted from an exact enclosure of x by
    guarded interval iteration of the Gauss map; a digit is accepted only
    while its floor is unambiguous.  Terms are accumulated until the running
    branch-length product (an upper bound on the remaining tail, since the
    tail is the product times a value in [0, 1]) drops below tol.  Exact
    inputs use a width-zero enclosure and terminate with bound 0 when their
    expansion ends; surds start from a 2**-precision wide enclosure.

    Raises PrecisionError when the enclosure becomes too wide (or the digit
    budget too small) before tol is reached; retry with a larger precision
    or max_digits.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError("tol must be positive")
    if isinstance(x, QuadraticSurd):
        if compare(x, 0) < 0 or compare(x, 1) > 0:
            raise DomainError(f"{x} is outside [0, 1]")
        lo_floor = scaled_floor(x, precision)
        lo = Fraction(lo_floor, 1 << precision)
        hi = Fraction(lo_floor + 1, 1 << precision)
    else:
        lo = hi = Fraction(x)
        if lo < 0 or lo > 1:
            raise DomainError(f"{x} is outside [0, 1]")

    total = Fraction(0)
    product = Fraction(1)
    sign = 1
    for _ in range(max_digits):
        if hi == 0:
            return ApproxValue(total, Fraction(0))  # expansion ended exactly
        if product < tol:
            return ApproxValue(total, product)
        if lo <= 0:
            raise PrecisionError(
                "enclosure straddles a digit boundary; "
                f"retry with precision > {precision}"
            )
        a = math.floor(1 / hi)
        if math.floor(1 / lo) != a or a < 1:
            raise PrecisionError(
                "continued-fraction digit is ambiguous at this enclosure width; "
                f"retry with precision > {precision}"
            )
        total += sign * product * part.t(a)
        product *= part.delta(a)
        sign = -sign
        lo, hi = 1 / hi - a, 1 / lo - a
        if lo < 0:
            lo = Fraction(0)
    if product < tol:
        return ApproxValue(total, product)
    raise PrecisionError(
        f"tail bound {float(product):.3g} still above tol after {max_digits} digits; "
        "retry with a larger max_digits"
    )


def luroth_digits_of(
    part: Partition, y: Fraction | int, max_steps: int = DEFAULT_ORBIT_CAP
) -> LurothDigits:
    """Luroth digit expansion of a rational in [0, 1].

    Digits are the branch indices along the exact Luroth orbit of y.  The
    expansion is finite when the orbit hits 0 and eventually periodic when a
    point recurs; if neither happens within max_steps the extraction is
    inconclusive and raises.

    Every rational closes for partitions whose branch slopes are integers
    (dyadic, harmonic), since denominators then never grow.  Partitions with
    fractional slopes (geometric, power with exponent >= 2) make generic
    rationals non-pre-periodic -- their denominators grow forever -- so only
    the rationals carried by finite or periodic expansions terminate.
    """
    y = Fraction(y)
    if y < 0 or y > 1:
        raise DomainError(f"{y} is outside [0, 1]")
    digits: list[int] = []
    seen: dict[Fraction, int] = {}
    x = y
    for _ in range(max_steps + 1):
        if x == 0:
            return LurothDigits(tuple(digits), ())
        if x in seen:
            start = seen[x]
            return LurothDigits(tuple(digits[:start]), tuple(digits[start:]))
        seen[x] = len(digits)
        j = part.branch_index(x)
        digits.append(j)
        x = (part.t(j) - x) / part.delta(j)
    raise InconclusiveError(
        f"Luroth orbit of {y} did not close within {max_steps} steps; "
        "retry with a larger depth"
    )


def luroth_series_eval(part: Partition, digits: DigitSequence) -> Fraction:
    """Exact value of the alternating series for a digit sequence (the
    inverse of Luroth digit extraction)."""
    if digits.is_finite:
        return block_summary(part, digits.preperiod).sum
    return _periodic_sum(part, digits.preperiod, digits.period)


def q_inverse_rational(
    part: Partition, y: Fraction | int, max_steps: int = DEFAULT_ORBIT_CAP
) -> Value:
    """Exact preimage of a rational y in [0, 1].

    Reads off the Luroth digits of y and evaluates them as a continued
    fraction: finite digits give a rational, eventually periodic digits a
    quadratic surd.
    """
    digits = luroth_digits_of(part, y, max_steps)
    return cf_eval(ContinuedFraction(digits.preperiod, digits.period))


def mediant_oracle(x: Fraction | int, depth: int = 256) -> Fraction:
    """Classical Minkowski question-mark value by pure Farey-mediant descent.

    Walks the Stern-Brocot tree, halving the value interval at each mediant;
    independent of all partition and series code so it can serve as an
    oracle for the dyadic case.  depth bounds the descent.
    """
    x = Fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"{x} is outside [0, 1]")
    lo_n, lo_d, lo_val = 0, 1, Fraction(0)
    hi_n, hi_d, hi_val = 1, 1, Fraction(1)
    if x == 0:
        return lo_val
    if x == 1:
        return hi_val
    for _ in range(depth):
        med = Fraction(lo_n + hi_n, lo_d + hi_d)
        med_val = (lo_val + hi_val) / 2
        if x == med:
            return med_val
        if x < med:
            hi_n, hi_d, hi_val = med.numerator, med.denominator, med_val
        else:
            lo_n, lo_d, lo_val = med.numerator, med.denominator, med_val
    raise InconclusiveError(f"{x} not reached within Stern-Brocot depth {depth}")
