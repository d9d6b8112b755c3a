"""Naive reference implementations, independent of the engine's code paths.

Everything here works on plain dicts/tuples and enumerates placements over
a full bounding window, so it is slow but obviously correct at small sizes.
"""

from __future__ import annotations

from tilestage.core import DX, DY, NULL, TileSet

Cells = dict[tuple[int, int], int]  # (x, y) -> tile index


def canon(cells: Cells) -> tuple:
    x0 = min(x for x, _ in cells)
    y0 = min(y for _, y in cells)
    return tuple(sorted((x - x0, y - y0, t) for (x, y), t in cells.items()))


def of_supertile(st) -> tuple:
    return canon({(int(x), int(y)): int(t) for (x, y), t in zip(st.coords, st.tiles)})


def from_canon(c: tuple) -> Cells:
    return {(x, y): t for x, y, t in c}


def glue_label(ts: TileSet, tile_idx: int, side: int) -> str:
    return ts.tiles[tile_idx].sides[side]


def pair_strength(ts: TileSet, a: str, b: str) -> int:
    if a != b or a == NULL:
        return 0
    return ts.glues.strength(a)


def naive_strength(x: Cells, y: Cells, dx: int, dy: int, ts: TileSet) -> int | None:
    """Total bond strength of Y placed at (dx, dy); None on overlap."""
    placed = {(px + dx, py + dy): t for (px, py), t in y.items()}
    for c in placed:
        if c in x:
            return None
    s = 0
    for (px, py), t in placed.items():
        for d in range(4):
            q = (px + DX[d], py + DY[d])
            if q in x:
                s += pair_strength(
                    ts, glue_label(ts, t, d), glue_label(ts, x[q], (d + 2) % 4)
                )
    return s


def naive_combine(x: Cells, y: Cells, tau: int, ts: TileSet) -> set[tuple]:
    """Every canonical union over the full Minkowski offset window."""
    xs = [p[0] for p in x]
    ys = [p[1] for p in x]
    xs2 = [p[0] for p in y]
    ys2 = [p[1] for p in y]
    out: set[tuple] = set()
    for dx in range(min(xs) - max(xs2) - 1, max(xs) - min(xs2) + 2):
        for dy in range(min(ys) - max(ys2) - 1, max(ys) - min(ys2) + 2):
            s = naive_strength(x, y, dx, dy, ts)
            if s is not None and s >= tau:
                u = dict(x)
                u.update({(px + dx, py + dy): t for (px, py), t in y.items()})
                out.add(canon(u))
    return out


def naive_closure(
    seeds: list[Cells], tau: int, ts: TileSet, max_size: int, max_count: int = 100_000
):
    """Bounded-grid closure: (produced, terminal, complete)."""
    produced: dict[tuple, Cells] = {}
    exceeded = False
    for s in seeds:
        if len(s) > max_size:
            exceeded = True
            continue
        produced[canon(s)] = {k: v for k, v in s.items()}
    frontier = list(produced)
    growable: set[tuple] = set()
    while frontier:
        nxt = []
        for zk in frontier:
            for wk in list(produced):
                z = produced[zk]
                w = produced[wk]
                res = naive_combine(z, w, tau, ts)
                if res:
                    growable.add(zk)
                    growable.add(wk)
                for ck in res:
                    if ck in produced:
                        continue
                    if len(ck) > max_size:
                        exceeded = True
                        continue
                    if len(produced) >= max_count:
                        return produced, set(), False
                    produced[ck] = from_canon(ck)
                    nxt.append(ck)
        frontier = nxt
    complete = not exceeded
    terminal = {k for k in produced if k not in growable} if complete else set()
    return produced, terminal, complete
