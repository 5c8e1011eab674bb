"""Pure-numpy kernel backend.

Vectorized equivalents of the scalar multiplier models plus the sequential
PRNG routines.  Everything operates on int64 arrays; widths are capped at
MAX_KERNEL_WIDTH so no intermediate can overflow.  The PRNG loops are plain
Python here (the numba backend compiles the identical algorithm); both
backends produce bit-identical streams.
"""

from __future__ import annotations

import numpy as np

from ._codes import LEAF_EFMLM, LEAF_EXACT, MASK64, XORSHIFT_MULT

NAME = "numpy"


def mitchell_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Flat Mitchell products of int64 operand arrays (elementwise).

    The characteristic comes from the float64 exponent, exact for any
    value below 2**53 and in particular for every kernel-supported width.
    """
    zero = (a == 0) | (b == 0)
    av = np.where(zero, 1, a)
    bv = np.where(zero, 1, b)
    k1 = (np.frexp(av.astype(np.float64))[1] - 1).astype(np.int64)
    k2 = (np.frexp(bv.astype(np.float64))[1] - 1).astype(np.int64)
    one = np.int64(1)
    m1 = av - (one << k1)
    m2 = bv - (one << k2)
    s = (m1 << k2) + (m2 << k1)
    base = one << (k1 + k2)
    p = np.where(s >= base, 2 * s, base + s)
    return np.where(zero, 0, p)


def _leaf2(a: np.ndarray, b: np.ndarray, leaf: int) -> np.ndarray:
    if leaf == LEAF_EXACT:
        return a * b
    p = mitchell_product(a, b)
    if leaf == LEAF_EFMLM:
        p = p + ((a == 3) & (b == 3))
    return p


def _kom(a: np.ndarray, b: np.ndarray, width: int, leaf: int, three: bool) -> np.ndarray:
    if width == 2:
        return _leaf2(a, b, leaf)
    half = width >> 1
    mask = (1 << half) - 1
    a_lo, a_hi = a & mask, a >> half
    b_lo, b_hi = b & mask, b >> half
    low = _kom(a_lo, b_lo, half, leaf, three)
    high = _kom(a_hi, b_hi, half, leaf, three)
    if three:
        da = a_lo - a_hi
        db = b_hi - b_lo
        cross = _kom(np.abs(da), np.abs(db), half, leaf, three)
        sign = np.where((da < 0) != (db < 0), -1, 1).astype(np.int64)
        mid = low + high + sign * cross
    else:
        mid = _kom(a_hi, b_lo, half, leaf, three) + _kom(a_lo, b_hi, half, leaf, three)
    return low + (mid << half) + (high << width)


def kom_product(a: np.ndarray, b: np.ndarray, width: int, leaf: int, three: bool) -> np.ndarray:
    """Karatsuba-Ofman products of int64 operand arrays."""
    return _kom(a, b, width, leaf, three)


def draw_words(state: int, count: int, width: int) -> tuple[np.ndarray, int]:
    """Draw ``count`` nonzero ``width``-bit words from the xorshift64* stream.

    Zero draws are rejected and the state advances past them, so the
    accepted values are uniform on [1, 2**width).  Returns the words and
    the advanced state for chunked consumption.
    """
    mask = (1 << width) - 1
    out = np.empty(count, dtype=np.int64)
    s = state
    filled = 0
    while filled < count:
        s ^= s >> 12
        s = (s ^ (s << 25)) & MASK64
        s ^= s >> 27
        v = ((s * XORSHIFT_MULT) & MASK64) & mask
        if v:
            out[filled] = v
            filled += 1
    return out, s


def salt_pepper(pixels: np.ndarray, density: float, seed: int) -> np.ndarray:
    """Impulse-corrupt a flat uint8 pixel array, one PRNG draw per pixel.

    Draw u in [0,1): u < density/2 paints black, density/2 <= u < density
    paints white, otherwise the pixel passes through.
    """
    out = pixels.copy()
    half = density / 2.0
    s = seed
    scale = 2.0 ** -64
    for i in range(out.size):
        s ^= s >> 12
        s = (s ^ (s << 25)) & MASK64
        s ^= s >> 27
        u = ((s * XORSHIFT_MULT) & MASK64) * scale
        if u < half:
            out[i] = 0
        elif u < density:
            out[i] = 255
    return out
