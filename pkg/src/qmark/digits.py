"""Finite and eventually periodic digit sequences.

The same container backs continued fractions and Luroth expansions: a
finite preperiod followed by a (possibly empty) repeating period.  Text
form is "[a1,a2,...]" when finite and "[a1,...;b1,...]" with a semicolon
before the period, e.g. "[;2]" for the purely periodic sequence 2,2,2,...
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .errors import DomainError, ParseError

_TEXT_RE = re.compile(r"^\[([0-9,\s]*)(?:;([0-9,\s]*))?\]$")


def _parse_digit_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


@dataclass(frozen=True)
class DigitSequence:
    """An eventually periodic sequence of positive integer digits."""

    preperiod: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        for a in self.preperiod + self.period:
            if not isinstance(a, int) or a < 1:
                raise DomainError(f"digits must be positive integers, got {a!r}")

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def is_empty(self) -> bool:
        return not self.preperiod and not self.period

    def __iter__(self) -> Iterator[int]:
        yield from self.preperiod
        while self.period:
            yield from self.period

    def first(self, n: int) -> tuple[int, ...]:
        """The first n digits (fewer if the sequence is finite and shorter)."""
        return tuple(islice(iter(self), n))

    def __str__(self) -> str:
        pre = ",".join(str(a) for a in self.preperiod)
        if self.is_finite:
            return f"[{pre}]"
        per = ",".join(str(a) for a in self.period)
        return f"[{pre};{per}]"

    @classmethod
    def parse(cls, text: str):
        """Parse the "[...]" / "[...;...]" text form."""
        m = _TEXT_RE.match(text.strip())
        if not m:
            raise ParseError(f"cannot parse digit sequence {text!r}")
        try:
            pre = _parse_digit_list(m.group(1))
            per = _parse_digit_list(m.group(2)) if m.group(2) is not None else ()
        except ValueError:
            raise ParseError(f"cannot parse digit sequence {text!r}") from None
        return cls(pre, per)
