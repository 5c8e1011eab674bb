"""Recursive Karatsuba-Ofman multiplier over radix 2.

Operands split into high/low halves down to 2-bit leaves; the leaf
multiplier is selectable (exact, plain Mitchell, or corrected Mitchell),
which is what turns the recursion into an exact wide multiplier when the
corrected leaf is used.  Both the four-product form and the three-product
form (one fewer sub-multiplication, signed cross term) are provided.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import backend
from ._codes import MAX_KERNEL_WIDTH, MODEL_LEAF
from .mitchell import _check_operand, _mitchell_value, efmlm2_multiply

MODELS = ("exact", "mitchell", "refmlm", "mitchell-kom")
VARIANTS = ("four-product", "three-product")

#: Models whose product is built by the KOM recursion (leaf-selectable).
KOM_MODELS = ("exact", "refmlm", "mitchell-kom")


@dataclass(frozen=True)
class MultiplierConfig:
    """Which multiplier model to evaluate and at what operand width.

    ``variant`` selects the KOM decomposition form and is ignored for the
    non-recursive models (``exact`` and the flat full-width ``mitchell``).
    """

    model: str = "refmlm"
    width: int = 8
    variant: str = "four-product"

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}, expected one of {MODELS}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}, expected one of {VARIANTS}")
        if self.width < 2 or self.width > 32 or self.width & (self.width - 1):
            raise ValueError(f"width must be a power of two in 2..32, got {self.width}")


class OperandSplit(NamedTuple):
    low: int
    high: int


def decompose_operand(value: int, width: int) -> OperandSplit:
    """Split a ``width``-bit operand into low and high halves."""
    if width < 2 or width % 2:
        raise ValueError(f"operand width must be even and >= 2, got {width}")
    _check_operand(value, width, "value")
    half = width // 2
    return OperandSplit(low=value & ((1 << half) - 1), high=value >> half)


def _leaf_exact(a: int, b: int) -> int:
    return a * b


def _leaf_mitchell2(a: int, b: int) -> int:
    return _mitchell_value(a, b)[0]


_LEAVES: dict[str, Callable[[int, int], int]] = {
    "exact": _leaf_exact,
    "mitchell-kom": _leaf_mitchell2,
    "refmlm": efmlm2_multiply,
}


def _signed_diff(u: int, v: int) -> tuple[int, int]:
    """u - v in sign-magnitude form: (+1 or -1, |u - v|)."""
    d = u - v
    return (1, d) if d >= 0 else (-1, -d)


def _kom(a: int, b: int, width: int, leaf: Callable[[int, int], int], three: bool) -> int:
    if width == 2:
        return leaf(a, b)
    half = width >> 1
    mask = (1 << half) - 1
    a_lo, a_hi = a & mask, a >> half
    b_lo, b_hi = b & mask, b >> half
    low = _kom(a_lo, b_lo, half, leaf, three)
    high = _kom(a_hi, b_hi, half, leaf, three)
    if three:
        sa, ma = _signed_diff(a_lo, a_hi)
        sb, mb = _signed_diff(b_hi, b_lo)
        mid = low + high + sa * sb * _kom(ma, mb, half, leaf, three)
    else:
        mid = _kom(a_hi, b_lo, half, leaf, three) + _kom(a_lo, b_hi, half, leaf, three)
    return low + (mid << half) + (high << width)


def kom_multiply(a: int, b: int, cfg: MultiplierConfig) -> int:
    """Karatsuba-Ofman product of two ``cfg.width``-bit operands.

    The leaf multiplier follows ``cfg.model``: exact 2x2, uncorrected 2-bit
    Mitchell (``mitchell-kom``), or the corrected 2-bit multiplier
    (``refmlm``).  The flat ``mitchell`` model is not KOM-composable; use
    :func:`multiply` for the unified model dispatch.
    """
    if cfg.model not in _LEAVES:
        raise ValueError(
            f"model {cfg.model!r} is not built from the KOM recursion; "
            f"expected one of {KOM_MODELS}"
        )
    _check_operand(a, cfg.width, "a")
    _check_operand(b, cfg.width, "b")
    return _kom(a, b, cfg.width, _LEAVES[cfg.model], cfg.variant == "three-product")


def multiply(a: int, b: int, cfg: MultiplierConfig) -> int:
    """Product of a and b under the configured multiplier model."""
    if cfg.model == "exact":
        _check_operand(a, cfg.width, "a")
        _check_operand(b, cfg.width, "b")
        return a * b
    if cfg.model == "mitchell":
        return _mitchell_value_checked(a, b, cfg.width)
    return kom_multiply(a, b, cfg)


def _mitchell_value_checked(a: int, b: int, width: int) -> int:
    _check_operand(a, width, "a")
    _check_operand(b, width, "b")
    return _mitchell_value(a, b)[0]


def multiply_array(a: np.ndarray, b: np.ndarray, cfg: MultiplierConfig) -> np.ndarray:
    """Vectorized :func:`multiply` over int64 operand arrays.

    Runs on the active kernel backend for widths up to 16; wider
    configurations go through the scalar path elementwise.  Results are
    bit-identical to the scalar reference for every model and variant.
    """
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError(f"operand shapes differ: {a.shape} vs {b.shape}")
    limit = 1 << cfg.width
    for name, arr in (("a", a), ("b", b)):
        if arr.size and (arr.min() < 0 or arr.max() >= limit):
            raise ValueError(f"operand array {name} has values outside 0..{limit - 1}")
    if cfg.width > MAX_KERNEL_WIDTH:
        # products no longer fit int64; scalar path on Python integers
        flat = [multiply(int(x), int(y), cfg) for x, y in zip(a.ravel(), b.ravel())]
        return np.array(flat, dtype=object).reshape(a.shape)
    if cfg.model == "exact":
        return a * b
    af, bf = a.ravel(), b.ravel()
    if cfg.model == "mitchell":
        out = backend.mitchell_product(af, bf)
    else:
        out = backend.kom_product(
            af, bf, cfg.width, MODEL_LEAF[cfg.model], cfg.variant == "three-product"
        )
    return out.reshape(a.shape)
