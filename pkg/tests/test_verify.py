import random

from tilestage.core import GlueTable, Placement, Tile, TileSet, canonicalize
from tilestage.verify import (
    AttachmentEvent,
    Shape,
    is_fully_connected,
    is_planar_attachment,
    is_planar_system,
    shape_equals,
)
from helpers import random_shape


def make_ts(**tiles):
    glues = GlueTable({"c": 1, "x": 1})
    return TileSet(glues, [Tile(n, **sides) for n, sides in tiles.items()])


def test_fully_connected_pair():
    ts = make_ts(l={"e": "c"}, r={"w": "c"})
    st = canonicalize({(0, 0): "l", (1, 0): "r"}, ts)
    assert is_fully_connected(st, ts)


def test_not_fully_connected_on_mismatch():
    ts = make_ts(l={"e": "c"}, r={"w": "x"})
    st = canonicalize({(0, 0): "l", (1, 0): "r"}, ts)
    assert not is_fully_connected(st, ts)


def test_not_fully_connected_on_null_edge():
    ts = make_ts(l={"e": "c"}, r={"w": "c"}, plain={})
    st = canonicalize({(0, 0): "l", (1, 0): "r", (1, 1): "plain"}, ts)
    assert not is_fully_connected(st, ts)


def _event(ts, left_cells, right_cells, dx, dy):
    left = canonicalize(left_cells, ts)
    right = canonicalize(right_cells, ts)
    # result construction mirrors the engine's union
    cells = dict(left.cells_dict(ts))
    for (x, y), t in right.cells_dict(ts).items():
        cells[(x + dx, y + dy)] = t
    return AttachmentEvent(left, right, Placement(dx, dy), canonicalize(cells, ts))


def test_end_to_end_line_join_is_planar():
    ts = make_ts(l={"e": "c"}, r={"w": "c"}, plain={})
    ev = _event(
        ts,
        {(0, 0): "plain", (1, 0): "l"},
        {(0, 0): "r", (1, 0): "plain"},
        2,
        0,
    )
    assert is_planar_attachment(ev)
    assert is_planar_system([ev])


def test_closing_a_ring_is_nonplanar():
    # C-shaped piece closes around a plug that touches on two opposite sides
    ts = make_ts(p={}, plug={"n": "c", "s": "c"}, top={"s": "c"}, bot={"n": "c"})
    c_cells = {
        (0, 0): "p",
        (0, 1): "p",
        (0, 2): "p",
        (1, 2): "top",
        (1, 0): "bot",
        (2, 0): "p",
        (2, 1): "p",
        (2, 2): "p",
    }
    ev = _event(ts, c_cells, {(0, 0): "plug"}, 1, 1)
    assert not is_planar_attachment(ev)


def test_planarity_symmetric_between_sides():
    ts = make_ts(p={}, plug={"n": "c", "s": "c"}, top={"s": "c"}, bot={"n": "c"})
    c_cells = {
        (0, 0): "p",
        (0, 1): "p",
        (0, 2): "p",
        (1, 2): "top",
        (1, 0): "bot",
        (2, 0): "p",
        (2, 1): "p",
        (2, 2): "p",
    }
    plug = {(0, 0): "plug"}
    ev1 = _event(ts, c_cells, plug, 1, 1)
    left = canonicalize(c_cells, ts)
    ev2 = AttachmentEvent(
        canonicalize(plug, ts), left, Placement(-1, -1), ev1.result
    )
    assert is_planar_attachment(ev1) == is_planar_attachment(ev2)


def test_shape_equals_identity_and_scale():
    rng = random.Random(3)
    for _ in range(100):
        sh = random_shape(rng, rng.randint(1, 12))
        assert shape_equals(sh, sh, 1)
        for s in (2, 3):
            assert shape_equals(sh, sh.expand(s), s)


def test_shape_equals_examples():
    domino = Shape([(0, 0), (1, 0)])
    rect24 = Shape([(x, y) for x in range(4) for y in range(2)])
    assert shape_equals(domino, rect24, 2)
    ltro = Shape([(0, 0), (0, 1), (1, 0)])
    jtro = Shape([(0, 0), (0, 1), (1, 1)])
    assert shape_equals(ltro, ltro.expand(2), 2)
    assert not shape_equals(ltro, jtro.expand(2), 2)
