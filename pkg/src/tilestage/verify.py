"""Qualitative checks on assemblies: connectivity, planarity, shape equality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .core import (
    DX,
    DY,
    DisconnectedCells,
    EmptyInput,
    Placement,
    Supertile,
    TileSet,
    _occupancy_table,
)


class Shape:
    """A finite 4-connected set of grid cells, canonical at the origin."""

    __slots__ = ("cells", "_hash")

    def __init__(self, cells: Iterable[tuple[int, int]]):
        pts = {(int(x), int(y)) for x, y in cells}
        if not pts:
            raise EmptyInput("empty shape")
        first = next(iter(pts))
        seen = {first}
        stack = [first]
        while stack:
            x, y = stack.pop()
            for d in range(4):
                q = (x + DX[d], y + DY[d])
                if q in pts and q not in seen:
                    seen.add(q)
                    stack.append(q)
        if len(seen) != len(pts):
            raise DisconnectedCells("shape is not 4-connected")
        x0 = min(p[0] for p in pts)
        y0 = min(p[1] for p in pts)
        self.cells = frozenset((x - x0, y - y0) for x, y in pts)
        self._hash = hash(self.cells)

    @classmethod
    def of(cls, st: Supertile) -> "Shape":
        return cls(st.cell_set())

    def __eq__(self, other) -> bool:
        return isinstance(other, Shape) and self.cells == other.cells

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.cells)

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [p[0] for p in self.cells]
        ys = [p[1] for p in self.cells]
        return min(xs), min(ys), max(xs), max(ys)

    def expand(self, scale: int) -> "Shape":
        """Replace each cell with a scale x scale block."""
        if scale < 1:
            raise ValueError("scale must be positive")
        return Shape(
            (x * scale + i, y * scale + j)
            for x, y in self.cells
            for i in range(scale)
            for j in range(scale)
        )

    def column(self, x: int) -> list[int]:
        return sorted(y for (cx, y) in self.cells if cx == x)

    def __repr__(self) -> str:
        return f"Shape({len(self.cells)} cells)"


@dataclass(frozen=True)
class AttachmentEvent:
    """Witness of one combine step: result = left union (right + placement)."""

    left: Supertile
    right: Supertile
    placement: Placement
    result: Supertile


def is_fully_connected(st: Supertile, ts: TileSet) -> bool:
    """True iff every 4-adjacent pair shares an equal glue of strength >= 1."""
    look = st.lookup()
    sides = st.sides(ts)
    strengths = ts.glues.strength_by_id
    for i, (x, y) in enumerate(st.coords):
        x = int(x)
        y = int(y)
        for d, side, opp_side in ((0, 0, 2), (1, 1, 3)):  # north, east suffice
            j = look.get((x + DX[d], y + DY[d]))
            if j is None:
                continue
            g = int(sides[i, side])
            if g != int(sides[j, opp_side]) or strengths[g] < 1:
                return False
    return True


def internal_edges(st: Supertile) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All 4-adjacent occupied cell pairs (each once)."""
    look = st.lookup()
    out = []
    for (x, y) in st.coords:
        x = int(x)
        y = int(y)
        if (x + 1, y) in look:
            out.append(((x, y), (x + 1, y)))
        if (x, y + 1) in look:
            out.append(((x, y), (x, y + 1)))
    return out


def is_planar_attachment(event: AttachmentEvent) -> bool:
    """True iff the right piece can slide from its placement to separation.

    Motion is unit-step axis-aligned translation that never overlaps the
    left piece; tiles never rotate, so this is the full in-plane motion
    model for these parts.
    """
    left = event.left
    right = event.right
    return bool(
        kernels.slide_escape(
            _occupancy_table(left),
            left.bbox(),
            right.coords,
            event.placement.dx,
            event.placement.dy,
        )
    )


def is_planar_system(trace: Sequence[AttachmentEvent]) -> bool:
    """True iff every step of the witness derivation is a planar attachment."""
    return all(is_planar_attachment(e) for e in trace)


def shape_equals(a: Shape, b: Shape, scale: int = 1) -> bool:
    """True iff b equals a scaled by `scale`, up to translation."""
    if scale == 1:
        return a == b
    if len(b) != len(a) * scale * scale:
        return False
    return a.expand(scale) == b
