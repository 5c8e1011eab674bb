"""Fixed-width integer primitives and the Mitchell logarithmic multiplier.

All arithmetic is exact shift-and-add on Python integers; the only
approximation is the one the multiplier itself makes (log2(1+x) ~ x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

MAX_WORD_WIDTH = 64


@dataclass(frozen=True)
class UWord:
    """Unsigned integer value carrying its declared bit width."""

    value: int
    width: int

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_WORD_WIDTH:
            raise ValueError(f"width must be in 1..{MAX_WORD_WIDTH}, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    def __int__(self) -> int:
        return self.value


class LogDecomposition(NamedTuple):
    """Characteristic k and the k mantissa bits below the leading one.

    The operand reconstructs as ``2**k + mantissa_bits``; the mantissa
    fraction is ``mantissa_bits / 2**k`` and always lies in [0, 1).
    """

    k: int
    mantissa_bits: int

    @property
    def value(self) -> int:
        return (1 << self.k) + self.mantissa_bits

    @property
    def mantissa_fraction(self) -> Fraction:
        return Fraction(self.mantissa_bits, 1 << self.k)

    def mantissa_binary(self) -> str:
        """Mantissa bits as a k-character binary string ('' when k is 0)."""
        return format(self.mantissa_bits, f"0{self.k}b") if self.k else ""


@dataclass(frozen=True)
class MitchellProduct:
    """Approximate product plus the mantissa-sum carry decision."""

    value: int
    width: int
    carry_case: bool


def _check_operand(value: int, width: int, name: str) -> None:
    if not 0 <= value < (1 << width):
        raise ValueError(f"operand {name}={value} does not fit in {width} bits")


def leading_one(value: int) -> int:
    """Bit position of the most significant set bit (the characteristic k)."""
    if value <= 0:
        raise ValueError("no leading one: operand must be a nonzero unsigned value")
    return value.bit_length() - 1


def log_decompose(value: int) -> LogDecomposition:
    """Split a nonzero value into characteristic and mantissa bits."""
    k = leading_one(value)
    return LogDecomposition(k=k, mantissa_bits=value - (1 << k))


def _mitchell_value(a: int, b: int) -> tuple[int, bool]:
    """Core Mitchell product on nonneg ints; returns (product, carry_case).

    With k1, k2 the characteristics and m1, m2 the integer mantissa bits,
    the aligned mantissa sum scaled by 2**(k1+k2) is the integer
    s = m1*2**k2 + m2*2**k1.  The mantissa fractions sum to >= 1 exactly
    when s >= 2**(k1+k2); the two antilog cases then reduce to 2*s and
    2**(k1+k2) + s, both exact integers.
    """
    if a == 0 or b == 0:
        return 0, False
    k1 = a.bit_length() - 1
    k2 = b.bit_length() - 1
    s = ((a - (1 << k1)) << k2) + ((b - (1 << k2)) << k1)
    base = 1 << (k1 + k2)
    if s >= base:
        return 2 * s, True
    return base + s, False


def mitchell_multiply(a: int, b: int, width: int) -> MitchellProduct:
    """Approximate product of two ``width``-bit operands (result 2*width bits).

    Zero operands short-circuit to a zero product; log/antilog are not
    defined at zero.  The approximation never overshoots: the returned
    value is <= a*b for every operand pair.
    """
    if width < 2 or width > 32:
        raise ValueError(f"multiplier width must be in 2..32, got {width}")
    _check_operand(a, width, "a")
    _check_operand(b, width, "b")
    value, carry = _mitchell_value(a, b)
    return MitchellProduct(value=value, width=2 * width, carry_case=carry)


def efmlm2_multiply(a: int, b: int) -> int:
    """Exact 2-bit multiply: Mitchell product plus a +1 correction at 3*3.

    3*3 is the only 2-bit pair where both operands have a nonzero mantissa,
    so it is the only pair the plain Mitchell product gets wrong (8 instead
    of 9).  The correction term is the AND of all four operand bits.
    """
    _check_operand(a, 2, "a")
    _check_operand(b, 2, "b")
    value, _ = _mitchell_value(a, b)
    if a == 3 and b == 3:
        value += 1
    return value
