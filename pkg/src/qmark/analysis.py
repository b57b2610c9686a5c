"""Desk-scale experiments: singularity statistics, distribution-function
comparison against the Gauss measure, and exact conjugation checks.

Everything here is deterministic given the seed: samples are rational
points k/2^53 from a seeded generator, evaluation is exact (with certified
truncation bounds where a tolerance is involved), and aggregation is
order-independent.
"""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .dynamics import gauss_step, luroth_step
from .errors import DomainError
from .exactnum import decimal_str
from .partition import Partition
from .question import q_eval_rational, q_eval_real

__all__ = [
    "MeasureTable",
    "SingularityReport",
    "conjugation_residual",
    "measure_compare",
    "singularity_stats",
]

_SAMPLE_SCALE = 1 << 53
SMALL_QUOTIENT_THRESHOLD = Fraction(1, 10)


@dataclass(frozen=True)
class SingularityReport:
    """Medians of symmetric difference quotients per step size, plus the
    fraction of quotients below the smallness threshold."""

    partition: str
    h_values: tuple[Fraction, ...]
    medians: tuple[Fraction, ...]
    small_fraction: tuple[Fraction, ...]
    sample_count: int
    seed: int
    threshold: Fraction = SMALL_QUOTIENT_THRESHOLD

    def rows(self) -> list[dict[str, str]]:
        return [
            {
                "h": _dec(h),
                "median_quotient": _dec(med),
                "fraction_below_0.1": _dec(frac),
            }
            for h, med, frac in zip(self.h_values, self.medians, self.small_fraction)
        ]


@dataclass(frozen=True)
class MeasureTable:
    """Distribution function of the pushed-forward measure versus the Gauss
    measure's log2(1+t) on a uniform rational grid."""

    partition: str
    grid: tuple[Fraction, ...]
    q_values: tuple[Fraction, ...]
    gauss_values: tuple[object, ...]  # mpmath floats at the working precision
    max_abs_gap: object

    def rows(self) -> list[dict[str, str]]:
        out = []
        for t, qv, gv in zip(self.grid, self.q_values, self.gauss_values):
            gap = abs(_mpf_of(qv) - gv)
            out.append(
                {
                    "t": _dec(t),
                    "q_alpha": _dec(qv),
                    "gauss_cdf": mp.nstr(gv, 18),
                    "gap": mp.nstr(gap, 12),
                }
            )
        return out


def _dec(x: Fraction, digits: int = 15) -> str:
    return decimal_str(x, digits)


def _mpf_of(x: Fraction):
    return mp.mpf(x.numerator) / mp.mpf(x.denominator)


def singularity_stats(
    part: Partition,
    n_samples: int,
    h_values: list[Fraction],
    precision: int = 256,
    seed: int = 0,
) -> SingularityReport:
    """Medians of (q(x+h) - q(x-h))/(2h) over seeded uniform samples.

    Samples are rationals k/2^53 with k drawn once (the same points are
    reused for every h); each evaluation is a truncated series with
    tolerance h^2, so a quotient carries at most h of certified error.
    """
    if n_samples < 1:
        raise DomainError("need at least one sample")
    hs = [Fraction(h) for h in h_values]
    if any(h < Fraction(1, 10**6) for h in hs):
        raise DomainError("step sizes below 1e-6 are not supported")
    if any(a <= b for a, b in zip(hs, hs[1:])):
        raise DomainError("h_values must be strictly decreasing")
    h_max = hs[0]
    k_lo = -((-h_max.numerator * _SAMPLE_SCALE) // h_max.denominator) + 1
    k_hi = ((1 - h_max).numerator * _SAMPLE_SCALE) // (1 - h_max).denominator - 1
    rng = random.Random(seed)
    xs = [Fraction(rng.randint(k_lo, k_hi), _SAMPLE_SCALE) for _ in range(n_samples)]

    medians: list[Fraction] = []
    small: list[Fraction] = []
    for h in hs:
        tol = h * h
        quotients = []
        for x in xs:
            upper = q_eval_real(part, x + h, tol, precision=precision).value
            lower = q_eval_real(part, x - h, tol, precision=precision).value
            quotients.append((upper - lower) / (2 * h))
        medians.append(Fraction(statistics.median(quotients)))
        below = sum(1 for q in quotients if q < SMALL_QUOTIENT_THRESHOLD)
        small.append(Fraction(below, n_samples))
    return SingularityReport(
        partition=str(part),
        h_values=tuple(hs),
        medians=tuple(medians),
        small_fraction=tuple(small),
        sample_count=n_samples,
        seed=seed,
    )


def measure_compare(part: Partition, grid_size: int, precision: int = 256) -> MeasureTable:
    """Exact q values against log2(1+t) on the grid t = k/grid_size."""
    if grid_size < 2:
        raise DomainError("grid_size must be >= 2")
    grid = [Fraction(k, grid_size) for k in range(grid_size + 1)]
    q_values = [q_eval_rational(part, t) for t in grid]
    with mp.workprec(precision):
        log2 = mp.log(2)
        gauss = [mp.log1p(_mpf_of(t)) / log2 for t in grid]
        max_gap = max(abs(_mpf_of(qv) - gv) for qv, gv in zip(q_values, gauss))
    return MeasureTable(
        partition=str(part),
        grid=tuple(grid),
        q_values=tuple(q_values),
        gauss_values=tuple(gauss),
        max_abs_gap=max_gap,
    )


def conjugation_residual(
    part: Partition,
    n_samples: int,
    seed: int = 0,
    max_denominator: int = 10_000,
) -> int:
    """Count exact failures of L(q(x)) == q(G(x)) over seeded random
    rationals; the conjugation identity makes the expected count 0."""
    if n_samples < 1:
        raise DomainError("need at least one sample")
    rng = random.Random(seed)
    failures = 0
    for _ in range(n_samples):
        den = rng.randint(2, max_denominator)
        num = rng.randint(1, den - 1)
        x = Fraction(num, den)
        lhs = luroth_step(part, q_eval_rational(part, x))
        rhs = q_eval_rational(part, gauss_step(x))
        if lhs != rhs:
            failures += 1
    return failures
