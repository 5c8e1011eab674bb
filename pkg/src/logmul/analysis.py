"""Exhaustive and sampled error analysis of the multiplier models.

Every evaluated pair is compared against plain integer multiplication (the
reference is never routed through any model).  Relative error follows
ER = (p_true - p_model) / p_true, so an underestimating model gives
positive ER; AER is the mean and MER the maximum over the evaluated set.

Aggregation is deterministic regardless of chunking: per-pair errors are
summed with math.fsum over fixed-size chunks, and histogram bucketing uses
exact integer comparisons against the bucket bounds.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterator

import numpy as np

from . import backend
from .kom import MultiplierConfig, multiply_array

CONVENTIONS = ("ordered-nonzero", "ordered-all", "unordered-nonzero")
SAMPLED = "sampled"

#: Half-open relative-error buckets; the two edge buckets catch the
#: overestimating three-product/uncorrected-leaf corner (negative ER, and
#: ER > 1 when the subtracted cross term drives the product negative).
BUCKET_LABELS = (
    "er<0",
    "er=0",
    "0<er<=0.05",
    "0.05<er<=0.1",
    "0.1<er<=0.5",
    "0.5<er<=1",
    "er>1",
)

MAX_EXHAUSTIVE_WIDTH = 8
_CHUNK_PAIRS = 1 << 20


def error_rate(p_true: int, p_err: int) -> float:
    """Relative error (p_true - p_err) / p_true; callers scale by 100 for %."""
    if p_true <= 0:
        raise ValueError("undefined ER: true product must be positive")
    return (p_true - p_err) / p_true


def _round6(v: float) -> float:
    """Round to 6 significant digits (the precision reports carry)."""
    return float(f"{v:.6g}")


@dataclass(frozen=True)
class ErrorStats:
    """Aggregated comparison of one multiplier model against true products."""

    model: str
    width: int
    variant: str
    convention: str
    seed: int | None
    pairs_evaluated: int
    aer_percent: float
    mer_percent: float
    zero_error_fraction: float
    histogram: tuple[int, ...]


class _Accumulator:
    """Order-insensitive aggregation of (true, model) product chunks."""

    def __init__(self) -> None:
        self.pairs = 0
        self.zero = 0
        self.mer = -math.inf
        self.hist = [0] * len(BUCKET_LABELS)
        self._chunk_sums: list[float] = []

    def add(self, true: np.ndarray, model: np.ndarray) -> None:
        d = true - model
        er = np.asarray(d / true, dtype=np.float64)
        self._chunk_sums.append(math.fsum(er.tolist()))
        self.mer = max(self.mer, float(er.max()))
        self.pairs += int(true.size)
        self.zero += int((d == 0).sum())
        self.hist[0] += int((d < 0).sum())
        self.hist[1] += int((d == 0).sum())
        pos = d > 0
        dd, tt = d[pos], true[pos]
        c2 = 20 * dd <= tt
        c3 = 10 * dd <= tt
        c4 = 2 * dd <= tt
        c5 = dd <= tt
        self.hist[2] += int(c2.sum())
        self.hist[3] += int((c3 & ~c2).sum())
        self.hist[4] += int((c4 & ~c3).sum())
        self.hist[5] += int((c5 & ~c4).sum())
        self.hist[6] += int((~c5).sum())

    def finalize(self, cfg: MultiplierConfig, convention: str, seed: int | None) -> ErrorStats:
        if self.pairs == 0:
            raise ValueError("no pairs evaluated")
        aer = math.fsum(self._chunk_sums) / self.pairs
        return ErrorStats(
            model=cfg.model,
            width=cfg.width,
            variant=cfg.variant,
            convention=convention,
            seed=seed,
            pairs_evaluated=self.pairs,
            aer_percent=_round6(aer * 100.0),
            mer_percent=_round6(self.mer * 100.0),
            zero_error_fraction=_round6(self.zero / self.pairs),
            histogram=tuple(self.hist),
        )


def _exhaustive_pairs(width: int, convention: str) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    hi = 1 << width
    if convention == "unordered-nonzero":
        ia, ib = np.triu_indices(hi - 1)
        a = (ia + 1).astype(np.int64)
        b = (ib + 1).astype(np.int64)
    else:
        vals = np.arange(1, hi, dtype=np.int64)
        a = np.repeat(vals, hi - 1)
        b = np.tile(vals, hi - 1)
        # ordered-all admits zero operands but their true product is zero,
        # so ER is undefined and those pairs drop out; the surviving set is
        # exactly the nonzero one.
    for lo in range(0, a.size, _CHUNK_PAIRS):
        yield a[lo : lo + _CHUNK_PAIRS], b[lo : lo + _CHUNK_PAIRS]


def analyze_exhaustive(cfg: MultiplierConfig, convention: str = "ordered-nonzero") -> ErrorStats:
    """Evaluate every operand pair of the chosen enumeration convention."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}, expected one of {CONVENTIONS}")
    if cfg.width > MAX_EXHAUSTIVE_WIDTH:
        raise ValueError(
            f"exhaustive enumeration is limited to width <= {MAX_EXHAUSTIVE_WIDTH}; "
            f"use analyze_sampled for width {cfg.width}"
        )
    acc = _Accumulator()
    for a, b in _exhaustive_pairs(cfg.width, convention):
        acc.add(a * b, multiply_array(a, b, cfg))
    return acc.finalize(cfg, convention, seed=None)


def corner_values(width: int) -> list[int]:
    """Structured nonzero corner operands: 1, all-ones, top bit, 01/10 patterns."""
    mask = (1 << width) - 1
    alt01 = int("01" * (width // 2), 2) if width >= 2 else 1
    alt10 = int("10" * (width // 2), 2) if width >= 2 else 1
    seen: list[int] = []
    for v in (1, mask, 1 << (width - 1), alt01 & mask, alt10 & mask):
        if v and v not in seen:
            seen.append(v)
    return seen


def analyze_sampled(cfg: MultiplierConfig, samples: int, seed: int) -> ErrorStats:
    """Evaluate uniformly sampled nonzero pairs plus the corner-pair set.

    Deterministic for a given seed: operands consume the xorshift64*
    stream in a0, b0, a1, b1, ... order with zero draws rejected.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not 0 < seed < (1 << 64):
        raise ValueError("seed must be a nonzero 64-bit value")
    acc = _Accumulator()
    corners = np.array(corner_values(cfg.width), dtype=np.int64)
    ca = np.repeat(corners, corners.size)
    cb = np.tile(corners, corners.size)
    acc.add(ca * cb, multiply_array(ca, cb, cfg))
    state = seed
    remaining = samples
    while remaining:
        m = min(remaining, _CHUNK_PAIRS)
        words, state = backend.draw_words(state, 2 * m, cfg.width)
        a, b = words[0::2], words[1::2]
        acc.add(a * b, multiply_array(a, b, cfg))
        remaining -= m
    return acc.finalize(cfg, SAMPLED, seed=seed)


def export_report(stats: ErrorStats, format: str) -> bytes:
    """Serialize stats as a CSV or JSON report with a stable field order."""
    if format == "json":
        doc = asdict(stats)
        doc["histogram"] = [
            {"bucket": label, "count": count}
            for label, count in zip(BUCKET_LABELS, stats.histogram)
        ]
        return (json.dumps(doc, indent=2) + "\n").encode()
    if format == "csv":
        seed = "-" if stats.seed is None else str(stats.seed)
        lines = [
            f"# model={stats.model} width={stats.width} variant={stats.variant} "
            f"convention={stats.convention} seed={seed} buckets=half-open (lo,hi]",
            "field,value",
            f"pairs_evaluated,{stats.pairs_evaluated}",
            f"aer_percent,{stats.aer_percent:.6f}",
            f"mer_percent,{stats.mer_percent:.6f}",
            f"zero_error_fraction,{stats.zero_error_fraction:.6f}",
        ]
        lines += [
            f"bucket[{label}],{count}"
            for label, count in zip(BUCKET_LABELS, stats.histogram)
        ]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {format!r}, expected 'csv' or 'json'")


def load_report_json(data: bytes) -> ErrorStats:
    """Parse a JSON report back into ErrorStats (inverse of export_report)."""
    doc = json.loads(data)
    labels = tuple(row["bucket"] for row in doc["histogram"])
    if labels != BUCKET_LABELS:
        raise ValueError(f"unexpected bucket labels {labels!r}")
    doc["histogram"] = tuple(row["count"] for row in doc["histogram"])
    return ErrorStats(**doc)
