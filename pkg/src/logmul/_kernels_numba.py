"""Numba kernel backend: @njit elementwise loops, same surface as the
numpy backend and bit-identical results (all-integer arithmetic)."""

from __future__ import annotations

import numpy as np
from numba import njit

from ._codes import LEAF_EFMLM, LEAF_EXACT, XORSHIFT_MULT

NAME = "numba"

_MULT = np.uint64(XORSHIFT_MULT)


@njit(cache=True)
def _mitchell1(a, b):
    if a == 0 or b == 0:
        return 0
    k1 = 0
    v = a >> 1
    while v:
        k1 += 1
        v >>= 1
    k2 = 0
    v = b >> 1
    while v:
        k2 += 1
        v >>= 1
    s = ((a - (1 << k1)) << k2) + ((b - (1 << k2)) << k1)
    base = 1 << (k1 + k2)
    if s >= base:
        return 2 * s
    return base + s


@njit(cache=True)
def _leaf1(a, b, leaf):
    if leaf == LEAF_EXACT:
        return a * b
    p = _mitchell1(a, b)
    if leaf == LEAF_EFMLM and a == 3 and b == 3:
        p += 1
    return p


@njit(cache=True)
def _kom1(a, b, width, leaf, three):
    if width == 2:
        return _leaf1(a, b, leaf)
    half = width >> 1
    mask = (1 << half) - 1
    a_lo = a & mask
    a_hi = a >> half
    b_lo = b & mask
    b_hi = b >> half
    low = _kom1(a_lo, b_lo, half, leaf, three)
    high = _kom1(a_hi, b_hi, half, leaf, three)
    if three:
        da = a_lo - a_hi
        db = b_hi - b_lo
        neg = False
        if da < 0:
            da = -da
            neg = not neg
        if db < 0:
            db = -db
            neg = not neg
        cross = _kom1(da, db, half, leaf, three)
        mid = low + high + (-cross if neg else cross)
    else:
        mid = _kom1(a_hi, b_lo, half, leaf, three) + _kom1(a_lo, b_hi, half, leaf, three)
    return low + (mid << half) + (high << width)


@njit(cache=True)
def _mitchell_arr(a, b):
    out = np.empty(a.size, dtype=np.int64)
    for i in range(a.size):
        out[i] = _mitchell1(a[i], b[i])
    return out


@njit(cache=True)
def _kom_arr(a, b, width, leaf, three):
    out = np.empty(a.size, dtype=np.int64)
    for i in range(a.size):
        out[i] = _kom1(a[i], b[i], width, leaf, three)
    return out


@njit(cache=True)
def _draw_words(state, count, width, out):
    mask = np.uint64((1 << width) - 1)
    s = state
    filled = 0
    while filled < count:
        s ^= s >> np.uint64(12)
        s ^= s << np.uint64(25)
        s ^= s >> np.uint64(27)
        v = (s * _MULT) & mask
        if v:
            out[filled] = np.int64(v)
            filled += 1
    return s


@njit(cache=True)
def _salt_pepper(out, density, seed):
    half = density / 2.0
    s = seed
    scale = 2.0 ** -64
    for i in range(out.size):
        s ^= s >> np.uint64(12)
        s ^= s << np.uint64(25)
        s ^= s >> np.uint64(27)
        u = np.float64(s * _MULT) * scale
        if u < half:
            out[i] = 0
        elif u < density:
            out[i] = 255


def mitchell_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _mitchell_arr(a, b)


def kom_product(a: np.ndarray, b: np.ndarray, width: int, leaf: int, three: bool) -> np.ndarray:
    return _kom_arr(a, b, width, leaf, three)


def draw_words(state: int, count: int, width: int) -> tuple[np.ndarray, int]:
    out = np.empty(count, dtype=np.int64)
    new_state = _draw_words(np.uint64(state), count, width, out)
    return out, int(new_state)


def salt_pepper(pixels: np.ndarray, density: float, seed: int) -> np.ndarray:
    out = pixels.copy()
    _salt_pepper(out, float(density), np.uint64(seed))
    return out
