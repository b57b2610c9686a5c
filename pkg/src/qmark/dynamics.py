"""The Gauss map and the piecewise-linear Luroth maps as exact dynamics.

Both maps send rationals to rationals and quadratic surds to quadratic
surds, so orbits can be iterated with exact repeat detection: a point is
pre-periodic precisely when some iterate recurs, and value equality is
decided exactly (never numerically).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError
from .exactnum import (
    QuadraticSurd,
    Value,
    compare,
    decimal_str,
    format_value,
    mobius_apply,
    surd_floor,
)
from .partition import Partition

__all__ = [
    "OrbitRecord",
    "gauss_step",
    "is_preperiodic",
    "luroth_map",
    "luroth_step",
    "orbit",
    "orbit_rows",
]


def gauss_step(x: Value) -> Value:
    """One Gauss-map step 1/x - floor(1/x), with 0 fixed.

    A surd steps through the fixed-discriminant reciprocal recursion, so its
    radicand never changes along an orbit.
    """
    if isinstance(x, QuadraticSurd):
        if compare(x, 0) < 0 or compare(x, 1) > 0:
            raise DomainError(f"{x} is outside [0, 1]")
        q_next = (x.d - x.p * x.p) // x.q
        p_next = -x.p
        a = surd_floor(QuadraticSurd(p_next, x.d, q_next))
        return QuadraticSurd(p_next - a * q_next, x.d, q_next)
    x = Fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"{x} is outside [0, 1]")
    if x == 0:
        return x
    return Fraction(x.denominator % x.numerator, x.numerator)


def luroth_step(part: Partition, x: Value) -> Value:
    """One Luroth-map step (t_j - x)/(t_j - t_{j+1}) on branch j.

    Branches are the half-open intervals (t_{j+1}, t_j], so every partition
    point t_j maps to 0 and the digit itinerary of a point is unique.
    """
    if not isinstance(x, QuadraticSurd):
        x = Fraction(x)
        if x < 0 or x > 1:
            raise DomainError(f"{x} is outside [0, 1]")
        if x == 0:
            return x
    j = part.branch_index(x)
    t = part.t(j)
    width = t - part.t(j + 1)
    if isinstance(x, QuadraticSurd):
        # (t - x)/width as an integer Moebius map
        a = -width.denominator * t.denominator
        b = t.numerator * width.denominator
        e = width.numerator * t.denominator
        return mobius_apply(a, b, 0, e, x)
    return (t - x) / width


def luroth_map(part: Partition) -> Callable[[Value], Value]:
    """The Luroth map of a partition as a single-argument step function."""

    def step(x: Value) -> Value:
        return luroth_step(part, x)

    return step


@dataclass(frozen=True)
class OrbitRecord:
    """An exactly iterated orbit segment.

    When a repeat was found, points[preperiod_length + period_length] equals
    points[preperiod_length] exactly and both lengths are minimal.  An open
    orbit (no repeat within the step budget) leaves both lengths None.
    """

    points: tuple[Value, ...]
    preperiod_length: int | None
    period_length: int | None

    @property
    def found_repeat(self) -> bool:
        return self.period_length is not None


def orbit(step: Callable[[Value], Value], x0: Value, max_steps: int) -> OrbitRecord:
    """Iterate a map exactly, stopping at the first repeated value.

    Repeat detection hashes canonical exact values, so a detected (m, p) is
    the true minimal preperiod/period of the orbit.
    """
    if max_steps < 1:
        raise DomainError("max_steps must be >= 1")
    points: list[Value] = [x0]
    seen: dict[Value, int] = {x0: 0}
    for k in range(1, max_steps + 1):
        x = step(points[-1])
        points.append(x)
        if x in seen:
            start = seen[x]
            return OrbitRecord(tuple(points), start, k - start)
        seen[x] = k
    return OrbitRecord(tuple(points), None, None)


def orbit_rows(record: OrbitRecord, digits: int = 17) -> list[dict[str, str]]:
    """CSV-ready rows (step, value as exact text, decimal approximation)."""
    return [
        {"step": str(k), "value": format_value(x), "approx": decimal_str(x, digits)}
        for k, x in enumerate(record.points)
    ]


def is_preperiodic(
    step: Callable[[Value], Value], x0: Value, max_steps: int
) -> tuple[int, int] | None:
    """Witness (preperiod m, period p) with step^(m+p)(x0) = step^m(x0), or
    None when no repeat occurred within max_steps.

    None is inconclusive rather than a definite "no": finite iteration can
    never certify that a point fails to be pre-periodic.
    """
    rec = orbit(step, x0, max_steps)
    if rec.found_repeat:
        return (rec.preperiod_length, rec.period_length)
    return None
