"""Pure-Python kernels: reference implementations of the hot inner loops.

The compiled module ``tilestage._kernels`` provides the same three entry
points; :mod:`tilestage.kernels` picks whichever is available at import.
"""

from __future__ import annotations

import numpy as np


def build_table(coords: np.ndarray):
    """Occupancy index for a supertile: (x, y) -> row index."""
    return {(int(x), int(y)): i for i, (x, y) in enumerate(coords)}


def eval_offsets(table, xsides, ycoords, ysides, offsets, strengths, tau):
    """Evaluate candidate placements of Y against a static X.

    For each offset, ok=1 iff the placed cell sets are disjoint and the total
    strength over newly coincident edges is >= tau; the strength is reported
    for non-overlapping placements.
    """
    n_off = len(offsets)
    ok = np.zeros(n_off, dtype=np.uint8)
    tot = np.zeros(n_off, dtype=np.int64)
    ylist = [(int(x), int(y)) for x, y in ycoords]
    get = table.get
    for oi in range(n_off):
        dx = int(offsets[oi, 0])
        dy = int(offsets[oi, 1])
        s = 0
        bad = False
        for i, (x, y) in enumerate(ylist):
            px = x + dx
            py = y + dy
            if (px, py) in table:
                bad = True
                break
            j = get((px, py + 1))
            if j is not None:
                g = ysides[i, 0]
                if g and g == xsides[j, 2]:
                    s += int(strengths[g])
            j = get((px + 1, py))
            if j is not None:
                g = ysides[i, 1]
                if g and g == xsides[j, 3]:
                    s += int(strengths[g])
            j = get((px, py - 1))
            if j is not None:
                g = ysides[i, 2]
                if g and g == xsides[j, 0]:
                    s += int(strengths[g])
            j = get((px - 1, py))
            if j is not None:
                g = ysides[i, 3]
                if g and g == xsides[j, 1]:
                    s += int(strengths[g])
        if bad:
            tot[oi] = -1
            continue
        tot[oi] = s
        if s >= tau:
            ok[oi] = 1
    return ok, tot


def slide_escape(table, xbbox, ycoords, start_dx, start_dy):
    """Can Y translate from its attached placement to full separation?

    Moves are unit axis-aligned steps that never overlap X.  The search
    window is the union bounding box inflated by max(width, height) + 1;
    separation means Y's box is disjoint from X's box inflated by 1.
    """
    ylist = [(int(x), int(y)) for x, y in ycoords]
    yx0 = min(p[0] for p in ylist)
    yx1 = max(p[0] for p in ylist)
    yy0 = min(p[1] for p in ylist)
    yy1 = max(p[1] for p in ylist)
    xx0, xy0, xx1, xy1 = xbbox

    ux0 = min(xx0, yx0 + start_dx)
    uy0 = min(xy0, yy0 + start_dy)
    ux1 = max(xx1, yx1 + start_dx)
    uy1 = max(xy1, yy1 + start_dy)
    m = max(ux1 - ux0 + 1, uy1 - uy0 + 1) + 1
    wx0, wy0, wx1, wy1 = ux0 - m, uy0 - m, ux1 + m, uy1 + m

    dx_lo = wx0 - yx0
    dx_hi = wx1 - yx1
    dy_lo = wy0 - yy0
    dy_hi = wy1 - yy1

    def separated(dx: int, dy: int) -> bool:
        return (
            yx1 + dx < xx0 - 1
            or yx0 + dx > xx1 + 1
            or yy1 + dy < xy0 - 1
            or yy0 + dy > xy1 + 1
        )

    def overlaps(dx: int, dy: int) -> bool:
        for (x, y) in ylist:
            if (x + dx, y + dy) in table:
                return True
        return False

    start = (int(start_dx), int(start_dy))
    if separated(*start):
        return True
    seen = {start}
    stack = [start]
    while stack:
        dx, dy = stack.pop()
        for ddx, ddy in ((0, 1), (1, 0), (0, -1), (-1, 0)):
            nx, ny = dx + ddx, dy + ddy
            if not (dx_lo <= nx <= dx_hi and dy_lo <= ny <= dy_hi):
                continue
            if (nx, ny) in seen:
                continue
            seen.add((nx, ny))
            if overlaps(nx, ny):
                continue
            if separated(nx, ny):
                return True
            stack.append((nx, ny))
    return False
