"""n x n squares at temperature 1: interlocking two-prong cuts, nine glues.

The square is halved by vertical cuts whose cut column donates its end
cells to the left piece as prongs; the right piece keeps the column's
middle, so the pieces interlock and cannot slide vertically.  Each cut
spends one of three glue triples, rotated so a piece's west and east faces
never share a triple (the discipline that makes three glues suffice for
lines).  Width-one pieces are vertical lines built by the line recursion
on the remaining triple, with prong and foot cells attached one at a time.
Cuts reach single tiles, so every internal edge of the square carries a
positive glue and the result is fully connected.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..core import DX, DY, OPPOSITE as OPP, GlueTable, Tile
from ..verify import Shape
from .plans import GenResult, Plan

LABELS = [f"g{i}" for i in range(1, 10)]
TRIPLES = (tuple(LABELS[0:3]), tuple(LABELS[3:6]), tuple(LABELS[6:9]))


class InvalidSize(ValueError):
    pass


def _third(a: int | None, b: int | None) -> int:
    return next(t for t in range(3) if t not in (a, b))


def _ekey(a, b):
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class _Piece:
    """Contiguous body columns plus bounded end decorations.

    trim: rows removed from each end of the westmost column (0..2).
    feet: east decoration length at rows 0 and H-1, just past x1.
    deep: x1 holds only two-cell clusters at both ends (deep-cut leaf).
    """

    x0: int
    x1: int
    trim: int
    wt: int | None = None
    et: int | None = None
    feet: int = 0
    deep: bool = False

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1


# tree nodes: ("tile", cell) | ("merge", frozenset(cells), [children])


class _Builder:
    def __init__(self, n: int):
        self.n = n
        self.glues = GlueTable({g: 1 for g in LABELS})
        self.plan = Plan(self.glues, f"square_jigsaw_{n}")
        self.edge: dict = {}
        self.target = {(x, y) for x in range(n) for y in range(n)}

    # ---- cells -----------------------------------------------------------

    def cells_of(self, p: _Piece) -> set:
        h = self.n
        out: set = set()
        for x in range(p.x0, p.x1 + 1):
            if p.deep and x == p.x1:
                out |= {(x, h - 1), (x, h - 2), (x, 0), (x, 1)}
                continue
            lo, hi = (p.trim, h - 1 - p.trim) if x == p.x0 else (0, h - 1)
            out |= {(x, y) for y in range(lo, hi + 1)}
        for k in range(p.feet):
            out.add((p.x1 + 1 + k, 0))
            out.add((p.x1 + 1 + k, h - 1))
        return out

    # ---- pass 1: decomposition, assigning every edge a label -------------

    def _used(self, cells, dirs) -> set:
        labs = set()
        for c in cells:
            for d in dirs:
                lab = self.edge.get(_ekey(c, (c[0] + DX[d], c[1] + DY[d])))
                if lab:
                    labs.add(lab)
        return labs

    def assign_cut(self, s1: set, s2: set, triple: int) -> None:
        """Label one cut interface.

        Vertical edges follow the cut's triple (main run, top prong tip,
        bottom prong tip), rotated so a piece's two faces never share a
        triple.  The horizontal prong edges are chosen greedily against the
        horizontal glues already incident to either side, since far-away
        pieces can otherwise hook onto a prong with a single stray bond.
        """
        h = self.n
        t = TRIPLES[triple]
        both = s1 | s2
        used_h = self._used(both, (0, 2))

        def pick(used: set) -> str:
            lab = next(g for g in LABELS if g not in used)
            used.add(lab)
            return lab

        bt = bb = None
        for (x, y) in sorted(s1):
            for d in range(4):
                b = (x + DX[d], y + DY[d])
                if b not in s2:
                    continue
                if DY[d] == 0:
                    label = t[1] if y == h - 1 else t[2] if y == 0 else t[0]
                else:
                    if max(y, y + DY[d]) > h // 2:
                        bt = bt or pick(used_h)
                        label = bt
                    else:
                        bb = bb or pick(used_h)
                        label = bb
                self.edge[_ekey((x, y), b)] = label

    def decompose(self, p: _Piece):
        if p.width == 1 or p.deep:
            return self.leaf(p)
        h = self.n
        cut = _third(p.wt, p.et)
        if p.width == 2 and p.trim >= 1:
            s1 = replace(p, et=cut, deep=True)
            s2 = _Piece(p.x1, p.x1, 2, cut, p.et, 0)
            cells2 = {(p.x1, y) for y in range(2, h - 2)}
        else:
            i = max(2, (p.width + 1) // 2)
            if p.trim >= 1 and i == 2:
                i = 3
            if i == p.width:
                s1 = replace(p, x1=p.x1 - 1, et=cut, feet=p.feet + 1)
                s2 = _Piece(p.x1, p.x1, 1, cut, p.et, 0)
            else:
                s1 = _Piece(p.x0, p.x0 + i - 2, p.trim, p.wt, cut, 1)
                s2 = _Piece(p.x0 + i - 1, p.x1, 1, cut, p.et, p.feet)
        cells1 = self.cells_of(s1)
        if not (p.width == 2 and p.trim >= 1):
            cells2 = self.cells_of(s2)
        whole = self.cells_of(p)
        assert cells1 | cells2 == whole and not (cells1 & cells2), (p, s1, s2)
        self.assign_cut(cells1, cells2, cut)
        left = self.decompose(s1)
        right = self.decompose(s2)
        return ("merge", frozenset(whole), [left, right])

    def _exposed(self, cells) -> list[set]:
        """Labels on assigned edges leaving the cell set, per direction."""
        out: list[set] = [set(), set(), set(), set()]
        for c in cells:
            for d in range(4):
                nb = (c[0] + DX[d], c[1] + DY[d])
                if nb in cells:
                    continue
                lab = self.edge.get(_ekey(c, nb))
                if lab:
                    out[d].add(lab)
        return out

    def _axis_labels(self, cell, horizontal: bool) -> set:
        dirs = (0, 2) if horizontal else (1, 3)
        labs = set()
        for d in dirs:
            lab = self.edge.get(_ekey(cell, (cell[0] + DX[d], cell[1] + DY[d])))
            if lab:
                labs.add(lab)
        return labs

    def leaf(self, p: _Piece):
        h = self.n
        x = p.x0
        lo, hi = p.trim, h - 1 - p.trim
        cells = self.cells_of(p)

        # decoration cells chain off the end cells of the column; each end
        # clump is assembled tile by tile before the line recursion sees it
        top_chain: list[tuple] = []
        bot_chain: list[tuple] = []
        if p.deep:
            xc = p.x1
            top_chain = [((xc, hi), (x, hi)), ((xc, hi + 1), (xc, hi))]
            bot_chain = [((xc, lo), (x, lo)), ((xc, lo - 1), (xc, lo))]
            top_tip, bot_tip = (xc, hi + 1), (xc, lo - 1)
        else:
            top_tip, bot_tip = (x, hi), (x, lo)
        for k in range(p.feet):
            xf = (p.x1 if p.deep else x) + 1 + k
            top_chain.append(((xf, h - 1), top_tip))
            top_tip = (xf, h - 1)
            bot_chain.append(((xf, 0), bot_tip))
            bot_tip = (xf, 0)

        # line labels first, so chain bins see the true exposure of end
        # cells; a split label must dodge whatever horizontal glues the end
        # clumps of its own span expose
        def deco_h(chain, base) -> set:
            labs = set()
            for cell, _ in chain:
                for d in (0, 2):
                    lab = self.edge.get(
                        _ekey(cell, (cell[0] + DX[d], cell[1] + DY[d]))
                    )
                    if lab:
                        labs.add(lab)
            return labs

        top_h = deco_h(top_chain, (x, hi))
        bot_h = deco_h(bot_chain, (x, lo))

        def assign_line(a: int, b: int, gbot, gtop) -> None:
            if a == b:
                return
            avoid = {gbot, gtop}
            if b == hi:
                avoid |= top_h
            if a == lo:
                avoid |= bot_h
            mid = a + (b - a + 1) // 2
            gm = next(g for g in LABELS if g not in avoid)
            self.edge[_ekey((x, mid - 1), (x, mid))] = gm
            assign_line(a, mid - 1, gbot, gm)
            assign_line(mid, b, gm, gtop)

        gbot0 = self.edge.get(_ekey((x, lo), (x, lo - 1)))
        gtop0 = self.edge.get(_ekey((x, hi), (x, hi + 1)))
        assign_line(lo, hi, gbot0, gtop0)

        # anchors: simulate each clump bin and avoid whatever the growing
        # piece exposes on the anchor's axis at that moment
        used: dict[bool, set] = {False: set(), True: set()}

        def do_chain(chain, base) -> None:
            acc = {base}
            for cell, anchor in chain:
                d = next(
                    dd
                    for dd in range(4)
                    if (cell[0] + DX[dd], cell[1] + DY[dd]) == anchor
                )
                horizontal = DY[d] != 0
                exp = self._exposed(acc)
                pair = (0, 2) if horizontal else (1, 3)
                avoid = (
                    exp[pair[0]]
                    | exp[pair[1]]
                    | used[horizontal]
                    | self._axis_labels(cell, horizontal)
                    | self._axis_labels(anchor, horizontal)
                )
                label = next(g for g in LABELS if g not in avoid)
                used[horizontal].add(label)
                self.edge[_ekey(cell, anchor)] = label
                # the tile's fixed sides must not match the piece elsewhere
                for dd in range(4):
                    nb = (cell[0] + DX[dd], cell[1] + DY[dd])
                    if nb in acc:
                        continue
                    ll = self.edge.get(_ekey(cell, nb))
                    if ll and ll in exp[OPP[dd]]:
                        raise AssertionError(
                            f"leaf chain conflict at {cell}: {ll} exposed"
                        )
                acc.add(cell)

        do_chain(top_chain, (x, hi))
        do_chain(bot_chain, (x, lo))

        def clump(chain, base):
            cset = {base}
            tree = ("tile", base)
            for cell, anchor in chain:
                cset.add(cell)
                tree = ("merge", frozenset(cset), [tree, ("tile", cell)])
            return tree, frozenset(cset)

        top_tree, top_cells = clump(top_chain, (x, hi))
        bot_tree, bot_cells = clump(bot_chain, (x, lo))

        def seg(a: int, b: int):
            if a == b:
                if a == hi and top_chain:
                    return top_tree, top_cells
                if a == lo and bot_chain:
                    return bot_tree, bot_cells
                return ("tile", (x, a)), frozenset([(x, a)])
            mid = a + (b - a + 1) // 2
            lt, lc = seg(a, mid - 1)
            rt, rc = seg(mid, b)
            cset = lc | rc
            return ("merge", cset, [lt, rt]), cset

        tree, built = seg(lo, hi)
        assert built == frozenset(cells), (p, sorted(set(cells) - set(built)))
        return tree

    def column_tree(self, x: int, lo: int, hi: int, line_t):
        def seg(a: int, b: int, gbot, gtop):
            if a == b:
                return ("tile", (x, a))
            mid = a + (b - a + 1) // 2
            gm = next(g for g in line_t if g not in (gbot, gtop))
            self.edge[_ekey((x, mid - 1), (x, mid))] = gm
            left = seg(a, mid - 1, gbot, gm)
            right = seg(mid, b, gm, gtop)
            return (
                "merge",
                frozenset((x, y) for y in range(a, b + 1)),
                [left, right],
            )

        gbot = self.edge.get(_ekey((x, lo), (x, lo - 1)))
        gtop = self.edge.get(_ekey((x, hi), (x, hi + 1)))
        return seg(lo, hi, gbot, gtop)

    # ---- pass 2: tiles and plan nodes -------------------------------------

    def glue_at(self, cell, d: int) -> str:
        nb = (cell[0] + DX[d], cell[1] + DY[d])
        if nb not in self.target:
            return "null"
        return self.edge.get(_ekey(cell, nb), "null")

    def tile_for(self, cell) -> Tile:
        quad = tuple(self.glue_at(cell, d) for d in range(4))
        name = "t." + ".".join("0" if g == "null" else g for g in quad)
        return Tile(name, *quad)

    def build(self, tree):
        kind = tree[0]
        if kind == "tile":
            return self.plan.tile(self.tile_for(tree[1]))
        _, cells, children = tree
        built = [self.build(c) for c in children]
        cellmap = {c: self.tile_for(c).name for c in sorted(cells)}
        for c in sorted(cells):
            self.plan.tile(self.tile_for(c))
        return self.plan.merge(built, cellmap)


def _small_square(n: int) -> GenResult:
    """Sequential column assembly for n <= 4 (too small for deep cuts)."""
    b = _Builder(n)
    t = TRIPLES
    # vertical interfaces: alternate two triples, extended by the third for n=4
    for i in range(n - 1):
        base = t[i % 2]
        extra = t[2]
        for y in range(n):
            label = base[y] if y < 3 else extra[i % 2]
            b.edge[_ekey((i, y), (i + 1, y))] = label
    trees = []
    for x in range(n):
        line_t = t[2] if n <= 3 else t[(x + 1) % 2]
        tree = b.column_tree(x, 0, n - 1, line_t)
        trees.append(tree)
    acc_cells = {(0, y) for y in range(n)}
    node = trees[0]
    for x in range(1, n):
        acc_cells |= {(x, y) for y in range(n)}
        node = ("merge", frozenset(acc_cells), [node, trees[x]])
    root = b.build(node)
    b.plan.root(root)
    system = b.plan.compile()
    target = Shape(b.target)
    return GenResult(system, target)


def gen_square_jigsaw(n: int) -> GenResult:
    """Staged system uniquely assembling a fully connected n x n square."""
    if n < 2:
        raise InvalidSize("n must be >= 2")
    if n <= 4:
        return _small_square(n)
    b = _Builder(n)
    piece = _Piece(0, n - 1, 0)
    tree = b.decompose(piece)
    root = b.build(tree)
    b.plan.root(root)
    system = b.plan.compile()
    return GenResult(system, Shape(b.target))
