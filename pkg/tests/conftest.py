"""Deterministic value generators and oracles shared by the test modules."""

import random
from fractions import Fraction

from qmark import QuadraticSurd, compare, surd_normalize


def truncated_series(part, digit_iter, tol):
    """Independent oracle: sum the alternating series term by term until the
    running branch-length product (a bound on the remaining tail) is < tol."""
    total = Fraction(0)
    product = Fraction(1)
    sign = 1
    for a in digit_iter:
        total += sign * product * part.t(a)
        product *= part.delta(a)
        sign = -sign
        if product < tol:
            break
    return total, product


def random_fractions(rng: random.Random, n: int, max_den: int = 10_000):
    """n random reduced fractions strictly inside (0, 1)."""
    out = []
    for _ in range(n):
        den = rng.randint(2, max_den)
        num = rng.randint(1, den - 1)
        out.append(Fraction(num, den))
    return out


def random_surds(rng: random.Random, n: int, bound: int = 40):
    """n random quadratic surds strictly inside (0, 1)."""
    out = []
    while len(out) < n:
        p = rng.randint(-bound, bound)
        d = rng.randint(2, bound * bound)
        q = rng.randint(1, bound) * rng.choice((1, -1))
        value = surd_normalize(p, d, q)
        if not isinstance(value, QuadraticSurd):
            continue
        if compare(value, 0) <= 0 or compare(value, 1) >= 0:
            continue
        out.append(value)
    return out
