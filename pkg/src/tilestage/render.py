"""Deterministic ascii and SVG rendering of supertiles and shapes."""

from __future__ import annotations

from .core import NULL, Supertile, TileSet
from .verify import Shape

CELL = 24  # svg pixels per cell


def render_ascii(obj: Supertile | Shape, ts: TileSet | None = None) -> str:
    """One character per cell: the tile id's first character, or '#'."""
    if isinstance(obj, Shape):
        cells = {c: "#" for c in obj.cells}
    else:
        if ts is None:
            cells = {c: "#" for c in obj.cell_set()}
        else:
            cells = {c: name[0] for c, name in obj.cells_dict(ts).items()}
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        lines.append(
            "".join(cells.get((x, y), ".") for x in range(min(xs), max(xs) + 1))
        )
    return "\n".join(lines) + "\n"


def _svg_header(width: int, height: int) -> str:
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )


def render_svg(obj: Supertile | Shape, ts: TileSet | None = None) -> str:
    """Unit squares; tile sides are labeled with their non-null glues."""
    if isinstance(obj, Shape):
        cells: dict[tuple[int, int], str | None] = {c: None for c in obj.cells}
        sides = {}
    else:
        cells = {c: name for c, name in (obj.cells_dict(ts) if ts else {}).items()}
        if not cells:
            cells = {c: None for c in obj.cell_set()}
        sides = {}
        if ts is not None:
            for (x, y), name in obj.cells_dict(ts).items():
                tile = ts.tiles[ts.index[name]]
                sides[(x, y)] = tile.sides
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    w = (x1 - x0 + 1) * CELL
    h = (y1 - y0 + 1) * CELL
    out = [_svg_header(w, h)]
    for (x, y) in sorted(cells):
        name = cells[(x, y)]
        px = (x - x0) * CELL
        py = (y1 - y) * CELL
        out.append(
            f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" '
            'fill="#e8e8f0" stroke="#333" stroke-width="1"/>'
        )
        if name:
            out.append(
                f'<text x="{px + CELL // 2}" y="{py + CELL // 2 + 3}" '
                f'font-size="8" text-anchor="middle">{name[:4]}</text>'
            )
        quad = sides.get((x, y))
        if quad:
            n, e, s, wl = quad
            cx = px + CELL // 2
            if n != NULL:
                out.append(
                    f'<text x="{cx}" y="{py + 7}" font-size="6" '
                    f'text-anchor="middle" fill="#06c">{n}</text>'
                )
            if s != NULL:
                out.append(
                    f'<text x="{cx}" y="{py + CELL - 2}" font-size="6" '
                    f'text-anchor="middle" fill="#06c">{s}</text>'
                )
            if e != NULL:
                out.append(
                    f'<text x="{px + CELL - 2}" y="{py + CELL // 2 + 2}" font-size="6" '
                    f'text-anchor="end" fill="#c60">{e}</text>'
                )
            if wl != NULL:
                out.append(
                    f'<text x="{px + 2}" y="{py + CELL // 2 + 2}" font-size="6" '
                    f'text-anchor="start" fill="#c60">{wl}</text>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"
