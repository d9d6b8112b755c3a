"""Shared random generators for the test suite (seeded, reproducible)."""

from __future__ import annotations

import random

from tilestage.core import DX, DY, GlueTable, Tile, TileSet, canonicalize
from tilestage.verify import Shape


def random_polyomino(rng: random.Random, n: int) -> set[tuple[int, int]]:
    """Uniform-ish random connected polyomino by random site growth."""
    cells = {(0, 0)}
    frontier = [(DX[d], DY[d]) for d in range(4)]
    while len(cells) < n:
        i = rng.randrange(len(frontier))
        c = frontier.pop(i)
        if c in cells:
            continue
        cells.add(c)
        for d in range(4):
            q = (c[0] + DX[d], c[1] + DY[d])
            if q not in cells:
                frontier.append(q)
    return cells


def random_glues(rng: random.Random, n: int, max_strength: int = 1) -> GlueTable:
    return GlueTable(
        {f"g{i}": rng.randint(1, max_strength) for i in range(n)}
    )


def random_tileset(rng: random.Random, glues: GlueTable, n_tiles: int) -> TileSet:
    labels = list(glues.labels)  # includes null
    tiles = []
    for i in range(n_tiles):
        tiles.append(
            Tile(
                f"t{i}",
                rng.choice(labels),
                rng.choice(labels),
                rng.choice(labels),
                rng.choice(labels),
            )
        )
    return TileSet(glues, tiles)


def random_supertile(rng: random.Random, ts: TileSet, n_cells: int):
    cells = random_polyomino(rng, n_cells)
    return canonicalize({c: rng.randrange(len(ts)) for c in cells}, ts)


def random_shape(rng: random.Random, n_cells: int) -> Shape:
    return Shape(random_polyomino(rng, n_cells))
