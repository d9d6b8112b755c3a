"""Length-n line systems from three glues by divide and conquer.

A 1 x 2^k line with end glues (a, b), a != b, splits into halves (a, c) and
(c, b) where c is the remaining glue; the end-glue difference makes each
merge unambiguous, and only the six ordered end-pairs ever occur.  General
n accumulates the powers of two present in n's binary expansion into one
output bin, choosing each summand's end glues so the accumulated line and
the incoming line can only meet at the intended joint.
"""

from __future__ import annotations

from ..core import GlueTable, Tile
from ..verify import Shape
from .plans import GenResult, Node, Plan

GLUES = ("a", "b", "c")


def _third(a: str, b: str) -> str:
    return next(g for g in GLUES if g not in (a, b))


def _tile_name(w: str, e: str) -> str:
    return f"t{w}{e}"


class _LineBuilder:
    def __init__(self, plan: Plan):
        self.plan = plan
        self.cache: dict[tuple[str, str, int], tuple[Node, list[str]]] = {}

    def line(self, w: str, e: str, length: int) -> tuple[Node, list[str]]:
        """Node producing the 1 x length line with west glue w, east glue e."""
        assert w != e
        tag = (w, e, length)
        if tag in self.cache:
            return self.cache[tag]
        if length == 1:
            node = self.plan.tile(Tile(_tile_name(w, e), w=w, e=e))
            tiles = [_tile_name(w, e)]
        else:
            mid = _third(w, e)
            left, lt = self.line(w, mid, length // 2)
            right, rt = self.line(mid, e, length - length // 2)
            tiles = lt + rt
            cells = {(i, 0): t for i, t in enumerate(tiles)}
            node = self.plan.merge([left, right], cells)
        self.cache[tag] = (node, tiles)
        return node, tiles


def gen_line_pow2(k: int) -> GenResult:
    """Staged system uniquely assembling a 1 x 2^k line."""
    if k < 0:
        raise ValueError("k must be >= 0")
    glues = GlueTable({g: 1 for g in GLUES})
    plan = Plan(glues, f"line_pow2_{k}")
    builder = _LineBuilder(plan)
    node, _ = builder.line("a", "b", 2**k)
    plan.root(node)
    system = plan.compile()
    target = Shape([(i, 0) for i in range(2**k)])
    return GenResult(system, target)


def gen_line(n: int) -> GenResult:
    """Staged system uniquely assembling a 1 x n line (3 glues, <= 7 bins)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    glues = GlueTable({g: 1 for g in GLUES})
    plan = Plan(glues, f"line_{n}")
    builder = _LineBuilder(plan)

    summands = [1 << i for i in range(n.bit_length()) if n >> i & 1]
    acc_w = "a"
    acc_e = "b"
    acc, acc_tiles = builder.line(acc_w, acc_e, summands[0])
    for summand in summands[1:]:
        # the next piece starts with the accumulator's east glue and must
        # not end with its west glue, or the two could join back to front
        nxt_e = _third(acc_w, acc_e)
        piece, piece_tiles = builder.line(acc_e, nxt_e, summand)
        acc_tiles = acc_tiles + piece_tiles
        cells = {(i, 0): t for i, t in enumerate(acc_tiles)}
        acc = plan.merge([acc, piece], cells)
        acc_e = nxt_e
    plan.root(acc)
    system = plan.compile()
    target = Shape([(i, 0) for i in range(n)])
    return GenResult(system, target)
