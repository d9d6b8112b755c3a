"""Core domain types for two-handed tile assembly.

Tiles are unrotatable unit squares with a glue label on each side.  Glues
bond only to an identical label (diagonal glue function); the bond strength
is the label's declared strength.  A supertile is a connected polyomino of
placed tiles, identified up to translation by its canonical form (minimum
coordinates at the origin).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

import numpy as np

from . import kernels

NULL = "null"

# Side order everywhere: north, east, south, west.  y grows to the north.
NORTH, EAST, SOUTH, WEST = range(4)
DX = (0, 1, 0, -1)
DY = (1, 0, -1, 0)
OPPOSITE = (SOUTH, WEST, NORTH, EAST)
SIDE_NAMES = ("n", "e", "s", "w")


class TamError(Exception):
    """Base class for assembly-domain errors."""


class EmptyInput(TamError):
    pass


class DisconnectedCells(TamError):
    pass


class OverlapError(TamError):
    pass


class UnknownGlue(TamError):
    pass


class UnknownTile(TamError):
    pass


class GlueTable:
    """Named bond labels with integer strengths.

    The reserved label ``null`` is always present with strength 0.  Labels
    are assigned stable integer ids (null gets 0) so supertile operations
    can run on arrays.
    """

    def __init__(self, strengths: Mapping[str, int] | None = None):
        self._strengths: dict[str, int] = {NULL: 0}
        if strengths:
            for label, s in strengths.items():
                self.add(label, s)
        self._rebuild()

    def add(self, label: str, strength: int) -> None:
        if label == NULL:
            if strength != 0:
                raise ValueError("the null glue has strength 0")
            return
        if strength < 0:
            raise ValueError(f"glue {label!r}: negative strength")
        self._strengths[label] = int(strength)
        self._rebuild()

    def _rebuild(self) -> None:
        labels = [NULL] + sorted(l for l in self._strengths if l != NULL)
        self.labels: tuple[str, ...] = tuple(labels)
        self.ids: dict[str, int] = {l: i for i, l in enumerate(labels)}
        self.strength_by_id = np.array(
            [self._strengths[l] for l in labels], dtype=np.int64
        )

    def strength(self, label: str) -> int:
        return self._strengths[label]

    def __contains__(self, label: str) -> bool:
        return label in self._strengths

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def nonnull_labels(self) -> list[str]:
        return [l for l in self.labels if l != NULL]

    def items(self) -> Iterable[tuple[str, int]]:
        return ((l, self._strengths[l]) for l in self.labels if l != NULL)

    def __eq__(self, other) -> bool:
        return isinstance(other, GlueTable) and self._strengths == other._strengths

    def __repr__(self) -> str:
        inner = ", ".join(f"{l}:{s}" for l, s in self.items())
        return f"GlueTable({inner})"


class Tile(NamedTuple):
    """Unrotatable unit square: a name plus its four glue labels."""

    name: str
    n: str = NULL
    e: str = NULL
    s: str = NULL
    w: str = NULL

    @property
    def sides(self) -> tuple[str, str, str, str]:
        return (self.n, self.e, self.s, self.w)


class TileSet:
    """A glue table plus a set of named tiles, compiled to integer arrays."""

    def __init__(self, glues: GlueTable, tiles: Sequence[Tile] = ()):
        self.glues = glues
        self.tiles: list[Tile] = []
        self.index: dict[str, int] = {}
        # (T, 4) glue ids in N,E,S,W order
        self.tile_sides = np.zeros((0, 4), dtype=np.int32)
        for t in tiles:
            self.add(t)

    def add(self, tile: Tile) -> int:
        for label in tile.sides:
            if label not in self.glues:
                raise UnknownGlue(f"tile {tile.name!r} references glue {label!r}")
        if tile.name in self.index:
            if self.tiles[self.index[tile.name]] != tile:
                raise ValueError(f"tile {tile.name!r} redeclared with different sides")
            return self.index[tile.name]
        idx = len(self.tiles)
        self.tiles.append(tile)
        self.index[tile.name] = idx
        row = np.array([[self.glues.ids[l] for l in tile.sides]], dtype=np.int32)
        self.tile_sides = np.vstack([self.tile_sides, row])
        return idx

    def __len__(self) -> int:
        return len(self.tiles)

    def name_of(self, idx: int) -> str:
        return self.tiles[idx].name


@dataclass(frozen=True)
class Placement:
    """Integer offset placing a right-hand supertile relative to a left one."""

    dx: int
    dy: int


class Supertile:
    """Canonical connected polyomino of placed tiles.

    ``coords`` is an (n, 2) int32 array sorted lexicographically by (x, y)
    with min x = min y = 0; ``tiles`` holds the aligned tile indices into the
    owning :class:`TileSet`.  Instances are immutable and hash by content.
    """

    __slots__ = (
        "coords",
        "tiles",
        "key",
        "_hash",
        "_lookup",
        "_edges",
        "_table",
    )

    def __init__(self, coords: np.ndarray, tiles: np.ndarray):
        self.coords = coords
        self.tiles = tiles
        self.key = coords.tobytes() + tiles.tobytes()
        self._hash = hash(self.key)
        self._lookup = None
        self._edges = None
        self._table = None

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Supertile) and self.key == other.key

    def __len__(self) -> int:
        return len(self.tiles)

    @property
    def size(self) -> int:
        return len(self.tiles)

    def bbox(self) -> tuple[int, int, int, int]:
        xs = self.coords[:, 0]
        ys = self.coords[:, 1]
        return int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max())

    def cell_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((int(x), int(y)) for x, y in self.coords)

    def cells_dict(self, ts: TileSet) -> dict[tuple[int, int], str]:
        return {
            (int(x), int(y)): ts.name_of(int(t))
            for (x, y), t in zip(self.coords, self.tiles)
        }

    def lookup(self) -> dict[tuple[int, int], int]:
        """Map (x, y) -> row index."""
        if self._lookup is None:
            self._lookup = {
                (int(x), int(y)): i for i, (x, y) in enumerate(self.coords)
            }
        return self._lookup

    def sides(self, ts: TileSet) -> np.ndarray:
        """(n, 4) glue ids per cell in N,E,S,W order."""
        return ts.tile_sides[self.tiles]

    def boundary_edges(self, ts: TileSet) -> list[list[tuple[int, int, int]]]:
        """Positive-glue boundary edges per direction: lists of (x, y, glue id)."""
        if self._edges is None:
            look = self.lookup()
            sides = self.sides(ts)
            strengths = ts.glues.strength_by_id
            out: list[list[tuple[int, int, int]]] = [[], [], [], []]
            for i, (x, y) in enumerate(self.coords):
                x = int(x)
                y = int(y)
                for d in range(4):
                    g = int(sides[i, d])
                    if g and strengths[g] > 0 and (x + DX[d], y + DY[d]) not in look:
                        out[d].append((x, y, g))
            self._edges = out
        return self._edges

    def render_cells(self) -> str:
        """Debug rendering: '#' per occupied cell, origin bottom-left."""
        x0, y0, x1, y1 = self.bbox()
        cells = self.cell_set()
        rows = []
        for y in range(y1, y0 - 1, -1):
            rows.append(
                "".join("#" if (x, y) in cells else "." for x in range(x0, x1 + 1))
            )
        return "\n".join(rows)


def canonicalize(cells: Mapping[tuple[int, int], object], ts: TileSet) -> Supertile:
    """Translate a cell->tile map so min coordinates are (0, 0).

    Tile values may be tile names or indices.  Raises EmptyInput or
    DisconnectedCells per the domain contract; equal inputs up to
    translation yield identical supertiles.
    """
    if not cells:
        raise EmptyInput("no cells")
    pts = list(cells.keys())
    seen = {pts[0]}
    stack = [pts[0]]
    cellset = set(pts)
    while stack:
        x, y = stack.pop()
        for d in range(4):
            q = (x + DX[d], y + DY[d])
            if q in cellset and q not in seen:
                seen.add(q)
                stack.append(q)
    if len(seen) != len(cellset):
        raise DisconnectedCells(f"{len(cellset) - len(seen)} cells unreachable")

    def tidx(v) -> int:
        if isinstance(v, str):
            if v not in ts.index:
                raise UnknownTile(v)
            return ts.index[v]
        return int(v)

    items = sorted((int(x), int(y), tidx(v)) for (x, y), v in cells.items())
    arr = np.array(items, dtype=np.int32)
    arr[:, 0] -= arr[:, 0].min()
    arr[:, 1] -= arr[:, 1].min()
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    arr = arr[order]
    return Supertile(np.ascontiguousarray(arr[:, :2]), np.ascontiguousarray(arr[:, 2]))


def from_rows(rows: Sequence[str], tiles_by_char: Mapping[str, object], ts: TileSet) -> Supertile:
    """Build a supertile from text rows (first row = top); '.' and ' ' are empty."""
    cells = {}
    height = len(rows)
    for r, row in enumerate(rows):
        for c, ch in enumerate(row):
            if ch in (".", " "):
                continue
            cells[(c, height - 1 - r)] = tiles_by_char[ch]
    return canonicalize(cells, ts)


def _occupancy_table(st: Supertile):
    if st._table is None:
        st._table = kernels.build_table(st.coords)
    return st._table


def attachment_strength(
    x: Supertile, y: Supertile, placement: Placement, ts: TileSet
) -> int:
    """Total strength over newly coincident edges of X and Y+offset.

    Raises OverlapError when the placed cell sets collide.
    """
    offsets = np.array([[placement.dx, placement.dy]], dtype=np.int32)
    ok, strength = kernels.eval_offsets(
        _occupancy_table(x),
        x.sides(ts),
        y.coords,
        y.sides(ts),
        offsets,
        ts.glues.strength_by_id,
        0,
    )
    if not ok[0]:
        raise OverlapError(f"cells collide at offset {(placement.dx, placement.dy)}")
    return int(strength[0])


def candidate_offsets(x: Supertile, y: Supertile, ts: TileSet) -> list[tuple[int, int]]:
    """Offsets aligning some positive boundary edge of X with a matching one of Y.

    Any placement of strength >= 1 must realize at least one such matching,
    so this list is a complete candidate set for tau >= 1.
    """
    ex = x.boundary_edges(ts)
    ey = y.boundary_edges(ts)
    cands: set[tuple[int, int]] = set()
    for d in range(4):
        if not ex[d]:
            continue
        by_glue: dict[int, list[tuple[int, int]]] = {}
        for (x2, y2, g) in ey[OPPOSITE[d]]:
            by_glue.setdefault(g, []).append((x2, y2))
        for (x1, y1, g) in ex[d]:
            for (x2, y2) in by_glue.get(g, ()):
                cands.add((x1 + DX[d] - x2, y1 + DY[d] - y2))
    return sorted(cands)


def _union(x: Supertile, y: Supertile, dx: int, dy: int) -> Supertile:
    shifted = y.coords + np.array([dx, dy], dtype=np.int32)
    coords = np.vstack([x.coords, shifted])
    tiles = np.concatenate([x.tiles, y.tiles])
    coords = coords.copy()
    coords[:, 0] -= coords[:, 0].min()
    coords[:, 1] -= coords[:, 1].min()
    order = np.lexsort((coords[:, 1], coords[:, 0]))
    return Supertile(
        np.ascontiguousarray(coords[order]), np.ascontiguousarray(tiles[order])
    )


def combine_events(
    x: Supertile, y: Supertile, tau: int, ts: TileSet
) -> list[tuple[Supertile, Placement]]:
    """All attachments of Y to X at strength >= tau, with their placements.

    Results are deduplicated by canonical form (first placement in
    deterministic offset order wins).
    """
    cands = candidate_offsets(x, y, ts)
    if not cands:
        return []
    offsets = np.array(cands, dtype=np.int32)
    ok, _ = kernels.eval_offsets(
        _occupancy_table(x),
        x.sides(ts),
        y.coords,
        y.sides(ts),
        offsets,
        ts.glues.strength_by_id,
        tau,
    )
    out: list[tuple[Supertile, Placement]] = []
    seen: set[bytes] = set()
    for i, (dx, dy) in enumerate(cands):
        if not ok[i]:
            continue
        st = _union(x, y, dx, dy)
        if st.key not in seen:
            seen.add(st.key)
            out.append((st, Placement(dx, dy)))
    return out


def combine(x: Supertile, y: Supertile, tau: int, ts: TileSet) -> set[Supertile]:
    """The combination set of X and Y at temperature tau (canonical forms)."""
    return {st for st, _ in combine_events(x, y, tau, ts)}
