"""Exact dyadic rationals r/2^k, the value type of every constructed function."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class Dyadic:
    """numerator / 2**exponent, kept normalized: odd numerator, or exponent 0."""
    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError(f"Error: negative exponent {self.exponent}")
        numerator, exponent = self.numerator, self.exponent
        while exponent > 0 and numerator % 2 == 0:
            numerator //= 2
            exponent -= 1
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'exponent', exponent)

    @classmethod
    def of(cls, value) -> Dyadic:
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        fraction = Fraction(value)
        denominator = fraction.denominator
        if denominator & (denominator - 1):
            raise ValueError(f"Error: {value} is not a dyadic rational")
        return cls(fraction.numerator, denominator.bit_length() - 1)

    def _aligned(self, other: Dyadic) -> tuple[int, int, int]:
        exponent = max(self.exponent, other.exponent)
        return (
            self.numerator << (exponent - self.exponent),
            other.numerator << (exponent - other.exponent),
            exponent,
        )

    def __add__(self, other) -> Dyadic:
        other = Dyadic.of(other)
        left, right, exponent = self._aligned(other)
        return Dyadic(left + right, exponent)

    __radd__ = __add__

    def __sub__(self, other) -> Dyadic:
        other = Dyadic.of(other)
        left, right, exponent = self._aligned(other)
        return Dyadic(left - right, exponent)

    def __mul__(self, other) -> Dyadic:
        other = Dyadic.of(other)
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def halve(self, times: int = 1) -> Dyadic:
        return Dyadic(self.numerator, self.exponent + times)

    def __lt__(self, other) -> bool:
        left, right, _ = self._aligned(Dyadic.of(other))
        return left < right

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Dyadic.of(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __hash__(self) -> int:
        return hash((self.numerator, self.exponent))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def render(self) -> str:
        return f"{self.numerator}/2^{self.exponent}"

    def __str__(self) -> str:
        return self.render()


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def parse_dyadic(text: str) -> Dyadic:
    """Read the `r/2^k` rendering back."""
    try:
        numerator, power = text.strip().split('/2^')
        return Dyadic(int(numerator), int(power))
    except ValueError as e:
        raise ValueError(f"Error: '{text}' is not of the form r/2^k") from e
