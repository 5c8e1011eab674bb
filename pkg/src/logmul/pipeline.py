"""Cycle-count model of one KOM multiplier stage.

One clock period per operation: operand decomposition, the four half-width
partial products (serialized, with the adder tree overlapping from period
four onward in the pipelined form), three accumulating adders, and product
alignment.  Counts clock periods only; wall-clock frequency is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

PIPELINED_LATENCY = 7
NON_PIPELINED_LATENCY = 9

#: (cycle offset, unit) schedule of a single operand pair.  In the
#: pipelined form pp3 shares period four with adder1 and pp4 shares period
#: five with adder2; the non-pipelined form runs strictly one unit per cycle.
PIPELINED_SCHEDULE = (
    (1, "decompose"),
    (2, "pp1"),
    (3, "pp2"),
    (4, "pp3"),
    (4, "adder1"),
    (5, "pp4"),
    (5, "adder2"),
    (6, "adder3"),
    (7, "align"),
)
NON_PIPELINED_SCHEDULE = (
    (1, "decompose"),
    (2, "pp1"),
    (3, "pp2"),
    (4, "pp3"),
    (5, "pp4"),
    (6, "adder1"),
    (7, "adder2"),
    (8, "adder3"),
    (9, "align"),
)


def stage_latency(pipelined: bool) -> int:
    """Clock periods from operand arrival to aligned product."""
    return PIPELINED_LATENCY if pipelined else NON_PIPELINED_LATENCY


@dataclass(frozen=True)
class StageTiming:
    """Latency/initiation-interval description of one multiplier stage.

    The default interval accepts a new operand pair every cycle when
    pipelined and only after completion (9 cycles) otherwise.
    """

    pipelined: bool
    initiation_interval: int = field(default=0)

    def __post_init__(self) -> None:
        if self.initiation_interval == 0:
            default = 1 if self.pipelined else NON_PIPELINED_LATENCY
            object.__setattr__(self, "initiation_interval", default)
        if self.initiation_interval < 1:
            raise ValueError("initiation interval must be >= 1")

    @property
    def latency_cycles(self) -> int:
        return stage_latency(self.pipelined)


class TraceEvent(NamedTuple):
    cycle: int
    unit: str
    operation: str

    def line(self) -> str:
        return f"{self.cycle},{self.unit},{self.operation}"


def simulate_stream(pairs: int, timing: StageTiming) -> int:
    """Total cycles to multiply a stream of operand pairs."""
    if pairs < 1:
        raise ValueError("empty stream: need at least one operand pair")
    return timing.latency_cycles + (pairs - 1) * timing.initiation_interval


def trace_stream(pairs: int, timing: StageTiming) -> list[TraceEvent]:
    """Per-cycle unit activity for the stream, ordered by cycle.

    Each unit is busy exactly one cycle per pair at a fixed offset, so no
    unit is ever scheduled twice in the same cycle for any interval >= 1.
    """
    if pairs < 1:
        raise ValueError("empty stream: need at least one operand pair")
    schedule = PIPELINED_SCHEDULE if timing.pipelined else NON_PIPELINED_SCHEDULE
    events = [
        TraceEvent(cycle + j * timing.initiation_interval, unit, f"pair{j}")
        for j in range(pairs)
        for cycle, unit in schedule
    ]
    events.sort(key=lambda e: (e.cycle, e.operation, e.unit))
    return events


def format_trace(events: list[TraceEvent]) -> str:
    return "\n".join(e.line() for e in events) + "\n"
