"""Interval partitions 1 = t_1 > t_2 > ... -> 0 with exact rational terms.

A partition splits (0, 1] into the branches (t_{j+1}, t_j].  Four
closed-form families are supported, all with rational terms:

    dyadic          t_j = 2^(1-j)
    harmonic        t_j = 1/j
    geometric(r)    t_j = r^(j-1),  0 < r < 1
    power(s)        t_j = 1/j^s,    integer s >= 1

dyadic coincides with geometric(1/2) and harmonic with power(1); the four
names are kept because dyadic and harmonic are the reference cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .exactnum import Value, compare

__all__ = ["Partition", "builtin_partitions"]

_FAMILIES = ("dyadic", "harmonic", "geometric", "power")


@dataclass(frozen=True)
class Partition:
    family: str
    ratio: Fraction | None = None  # geometric only
    exponent: int | None = None  # power only

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise DomainError(f"unknown partition family {self.family!r}")
        if self.family == "geometric":
            if self.ratio is None or not 0 < self.ratio < 1:
                raise DomainError("geometric partition needs a ratio in (0, 1)")
        elif self.ratio is not None:
            raise DomainError(f"{self.family} partition takes no ratio")
        if self.family == "power":
            if self.exponent is None or self.exponent < 1:
                raise DomainError("power partition needs an integer exponent >= 1")
        elif self.exponent is not None:
            raise DomainError(f"{self.family} partition takes no exponent")

    @classmethod
    def dyadic(cls) -> "Partition":
        return cls("dyadic")

    @classmethod
    def harmonic(cls) -> "Partition":
        return cls("harmonic")

    @classmethod
    def geometric(cls, ratio: Fraction) -> "Partition":
        return cls("geometric", ratio=Fraction(ratio))

    @classmethod
    def power(cls, exponent: int) -> "Partition":
        return cls("power", exponent=exponent)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse "dyadic", "harmonic", "geometric:NUM/DEN", or "power:S"."""
        name, sep, arg = text.strip().partition(":")
        try:
            if name == "dyadic" and not sep:
                return cls.dyadic()
            if name == "harmonic" and not sep:
                return cls.harmonic()
            if name == "geometric" and sep:
                return cls.geometric(Fraction(arg))
            if name == "power" and sep:
                return cls.power(int(arg))
        except (ValueError, ZeroDivisionError, DomainError) as exc:
            raise ParseError(f"bad partition spec {text!r}: {exc}") from None
        raise ParseError(f"bad partition spec {text!r}")

    def __str__(self) -> str:
        if self.family == "geometric":
            return f"geometric:{self.ratio}"
        if self.family == "power":
            return f"power:{self.exponent}"
        return self.family

    def t(self, j: int) -> Fraction:
        """The j-th partition point t_j, exactly."""
        if j < 1:
            raise DomainError("partition index must be >= 1")
        if self.family == "dyadic":
            return Fraction(1, 1 << (j - 1))
        if self.family == "harmonic":
            return Fraction(1, j)
        if self.family == "geometric":
            return self.ratio ** (j - 1)
        return Fraction(1, j**self.exponent)

    def delta(self, j: int) -> Fraction:
        """Length t_j - t_{j+1} of the j-th branch, always positive."""
        return self.t(j) - self.t(j + 1)

    def branch_index(self, x: Value) -> int:
        """The unique j with t_{j+1} < x <= t_j, for 0 < x <= 1.

        Exponential search followed by bisection; x near 0 can live in a
        branch with a very large index for slowly decaying families.
        """
        if compare(x, 0) <= 0 or compare(x, 1) > 0:
            raise DomainError(f"{x} is outside (0, 1]")
        hi = 1
        while compare(self.t(hi + 1), x) >= 0:
            hi *= 2
        lo = hi // 2 + 1 if hi > 1 else 1
        while lo < hi:
            mid = (lo + hi) // 2
            if compare(self.t(mid + 1), x) < 0:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def index_below(self, eps: Fraction) -> int:
        """Smallest j with t_j <= eps (an effective witness that t_j -> 0)."""
        eps = Fraction(eps)
        if eps <= 0:
            raise DomainError("eps must be positive")
        if self.family == "harmonic":
            return max(1, -(-eps.denominator // eps.numerator))
        if self.t(1) <= eps:
            return 1
        hi = 2
        while self.t(hi) > eps:
            hi *= 2
        lo = hi // 2 + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if self.t(mid) <= eps:
                hi = mid
            else:
                lo = mid + 1
        return lo


def builtin_partitions() -> tuple[Partition, ...]:
    """The partitions exercised throughout the test and experiment suites."""
    return (
        Partition.dyadic(),
        Partition.harmonic(),
        Partition.geometric(Fraction(1, 3)),
        Partition.power(2),
    )
