"""Closure engine: the produced set P' and terminal set P of a single bin.

The produced set is the least fixed point of: seeds are produced, and any
combination of two produced supertiles is produced.  Budgets make the
computation decidable at desk scale; a bin that exceeds its budget is
reported incomplete rather than failing hard, so executors can point at
the diverging bin.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Placement, Supertile, TileSet, combine_events
from .verify import AttachmentEvent, Shape, shape_equals


@dataclass(frozen=True)
class ClosureBudget:
    max_supertile_size: int = 10_000
    max_distinct_supertiles: int = 100_000

    def __post_init__(self):
        if self.max_supertile_size < 1 or self.max_distinct_supertiles < 1:
            raise ValueError("budgets must be >= 1")


@dataclass
class Bin:
    """Seed supertiles plus the temperature they assemble at."""

    seeds: list[Supertile]
    temperature: int


@dataclass
class BinResult:
    produced: dict[bytes, Supertile]
    terminal: list[Supertile]
    complete: bool
    exceeded: str | None = None  # "size" | "count" when incomplete
    events: dict[bytes, AttachmentEvent] = field(default_factory=dict)
    seed_keys: set[bytes] = field(default_factory=set)

    @property
    def unique(self) -> bool:
        return unique_production(self)

    def terminal_shapes(self) -> set[Shape]:
        return {Shape.of(st) for st in self.terminal}


def produce_closure(bin_: Bin, ts: TileSet, budget: ClosureBudget | None = None) -> BinResult:
    """Compute P' and P of a bin under an explicit budget.

    The worklist pairs each newly produced supertile against everything
    known (itself included); the resulting sets are order-independent, and
    the recorded witness events are deterministic for a given seed order.
    """
    budget = budget or ClosureBudget()
    tau = bin_.temperature
    produced: dict[bytes, Supertile] = {}
    events: dict[bytes, AttachmentEvent] = {}
    growable: set[bytes] = set()
    queue: deque[bytes] = deque()
    exceeded: str | None = None

    for seed in bin_.seeds:
        if seed.size > budget.max_supertile_size:
            exceeded = "size"
            continue
        if seed.key not in produced:
            produced[seed.key] = seed
            queue.append(seed.key)
    seed_keys = set(produced)

    while queue:
        zk = queue.popleft()
        z = produced[zk]
        # snapshot: later arrivals will pair with z when they are processed
        partners = list(produced.values())
        for w in partners:
            results = combine_events(z, w, tau, ts)
            if results:
                growable.add(z.key)
                growable.add(w.key)
            for st, placement in results:
                if st.key in produced:
                    continue
                if st.size > budget.max_supertile_size:
                    # the true closure grows past the budget: keep closing the
                    # bounded portion so the result is still a fixed point
                    exceeded = "size"
                    continue
                if len(produced) + 1 > budget.max_distinct_supertiles:
                    return BinResult(produced, [], False, "count", events, seed_keys)
                produced[st.key] = st
                events[st.key] = AttachmentEvent(z, w, placement, st)
                queue.append(st.key)

    complete = exceeded is None
    terminal = (
        [st for key, st in produced.items() if key not in growable] if complete else []
    )
    return BinResult(produced, terminal, complete, exceeded, events, seed_keys)


def unique_production(result: BinResult) -> bool:
    """Unique production: the closure is finite and has a terminal supertile.

    A complete closure guarantees every produced supertile can keep
    combining until it reaches a terminal one, so completeness plus a
    nonempty terminal set is the operational reading.
    """
    return result.complete and len(result.terminal) > 0


def uniquely_assembles_shape(result: BinResult, target: Shape, scale: int = 1) -> bool:
    """True iff the bin uniquely produces a single supertile of this shape."""
    if not unique_production(result) or len(result.terminal) != 1:
        return False
    return shape_equals(target, Shape.of(result.terminal[0]), scale)


def witness_trace(result: BinResult, target: Supertile) -> list[AttachmentEvent]:
    """One derivation of `target` from the bin's seeds, in assembly order."""
    out: list[AttachmentEvent] = []

    def walk(key: bytes) -> None:
        ev = result.events.get(key)
        if ev is None:
            return
        walk(ev.left.key)
        walk(ev.right.key)
        out.append(ev)

    if target.key not in result.produced:
        raise KeyError("target was not produced by this bin")
    walk(target.key)
    return out
