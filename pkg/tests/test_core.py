import random

import pytest

from tilestage.core import (
    DisconnectedCells,
    EmptyInput,
    GlueTable,
    OverlapError,
    Placement,
    Tile,
    TileSet,
    attachment_strength,
    canonicalize,
    combine,
)
from helpers import random_glues, random_supertile, random_tileset
from oracle import naive_combine, naive_strength, of_supertile


@pytest.fixture
def simple_ts():
    glues = GlueTable({"a": 1, "b": 1, "c": 1, "w": 1})
    return TileSet(
        glues,
        [
            Tile("t", e="c"),
            Tile("u", w="c"),
            Tile("p", e="a"),
            Tile("q", w="b"),
            Tile("nw", n="w", e="a"),
            Tile("nw2", n="w", w="a"),
            Tile("sw", s="w", e="a"),
            Tile("sw2", s="w", w="a"),
        ],
    )


def test_canonicalize_translates_to_origin(simple_ts):
    st = canonicalize({(5, 7): "t"}, simple_ts)
    assert st.cells_dict(simple_ts) == {(0, 0): "t"}


def test_canonicalize_translation_invariance(simple_ts):
    a = canonicalize({(2, 2): "p", (3, 2): "q"}, simple_ts)
    b = canonicalize({(9, -1): "p", (10, -1): "q"}, simple_ts)
    assert a == b
    assert a.key == b.key


def test_canonicalize_rejects_gap(simple_ts):
    with pytest.raises(DisconnectedCells):
        canonicalize({(0, 0): "p", (2, 0): "q"}, simple_ts)


def test_canonicalize_rejects_empty(simple_ts):
    with pytest.raises(EmptyInput):
        canonicalize({}, simple_ts)


def test_canonicalize_idempotent_random():
    rng = random.Random(7)
    for _ in range(500):
        ts = random_tileset(rng, random_glues(rng, 3), 4)
        st = random_supertile(rng, ts, rng.randint(1, 9))
        again = canonicalize(st.cells_dict(ts), ts)
        assert again == st


def test_attachment_strength_matching_pair(simple_ts):
    x = canonicalize({(0, 0): "t"}, simple_ts)
    y = canonicalize({(0, 0): "u"}, simple_ts)
    assert attachment_strength(x, y, Placement(1, 0), simple_ts) == 1


def test_attachment_strength_mismatch_is_zero(simple_ts):
    x = canonicalize({(0, 0): "p"}, simple_ts)
    y = canonicalize({(0, 0): "q"}, simple_ts)
    assert attachment_strength(x, y, Placement(1, 0), simple_ts) == 0


def test_attachment_strength_two_bonds(simple_ts):
    # two 1x2 lines stacked; both columns bond with glue w
    x = canonicalize({(0, 0): "nw", (1, 0): "nw2"}, simple_ts)
    y = canonicalize({(0, 0): "sw", (1, 0): "sw2"}, simple_ts)
    # hand enumeration: exactly the two vertical w-w coincidences
    assert attachment_strength(x, y, Placement(0, 1), simple_ts) == 2


def test_attachment_strength_overlap_raises(simple_ts):
    x = canonicalize({(0, 0): "t"}, simple_ts)
    with pytest.raises(OverlapError):
        attachment_strength(x, x, Placement(0, 0), simple_ts)


def test_combine_forced_single_attachment(simple_ts):
    x = canonicalize({(0, 0): "t"}, simple_ts)
    y = canonicalize({(0, 0): "u"}, simple_ts)
    res = combine(x, y, 1, simple_ts)
    assert len(res) == 1
    (st,) = res
    assert st.cells_dict(simple_ts) == {(0, 0): "t", (1, 0): "u"}


def test_combine_no_shared_glue_empty(simple_ts):
    x = canonicalize({(0, 0): "p"}, simple_ts)
    y = canonicalize({(0, 0): "q"}, simple_ts)
    assert combine(x, y, 1, simple_ts) == set()


def test_combine_commutative_random():
    rng = random.Random(11)
    for _ in range(500):
        ts = random_tileset(rng, random_glues(rng, 3), 4)
        x = random_supertile(rng, ts, rng.randint(1, 7))
        y = random_supertile(rng, ts, rng.randint(1, 7))
        tau = rng.randint(1, 2)
        assert combine(x, y, tau, ts) == combine(y, x, tau, ts)


def test_combine_temperature_monotone_random():
    rng = random.Random(13)
    for _ in range(500):
        ts = random_tileset(rng, random_glues(rng, 3, max_strength=2), 4)
        x = random_supertile(rng, ts, rng.randint(1, 7))
        y = random_supertile(rng, ts, rng.randint(1, 7))
        tau = rng.randint(1, 2)
        assert combine(x, y, tau + 1, ts) <= combine(x, y, tau, ts)


def test_combine_size_additive_random():
    rng = random.Random(17)
    for _ in range(200):
        ts = random_tileset(rng, random_glues(rng, 3), 4)
        x = random_supertile(rng, ts, rng.randint(1, 7))
        y = random_supertile(rng, ts, rng.randint(1, 7))
        for st in combine(x, y, 1, ts):
            assert st.size == x.size + y.size


def test_combine_matches_naive_oracle():
    rng = random.Random(19)
    for _ in range(300):
        ts = random_tileset(rng, random_glues(rng, 4, max_strength=2), 5)
        x = random_supertile(rng, ts, rng.randint(1, 12))
        y = random_supertile(rng, ts, rng.randint(1, 12))
        tau = rng.randint(1, 2)
        got = {of_supertile(st) for st in combine(x, y, tau, ts)}
        xc = {(int(a), int(b)): int(t) for (a, b), t in zip(x.coords, x.tiles)}
        yc = {(int(a), int(b)): int(t) for (a, b), t in zip(y.coords, y.tiles)}
        assert got == naive_combine(xc, yc, tau, ts)


def test_attachment_strength_matches_naive_random():
    rng = random.Random(23)
    checked = 0
    while checked < 200:
        ts = random_tileset(rng, random_glues(rng, 3, max_strength=2), 4)
        x = random_supertile(rng, ts, rng.randint(1, 8))
        y = random_supertile(rng, ts, rng.randint(1, 8))
        dx = rng.randint(-6, 9)
        dy = rng.randint(-6, 9)
        xc = {(int(a), int(b)): int(t) for (a, b), t in zip(x.coords, x.tiles)}
        yc = {(int(a), int(b)): int(t) for (a, b), t in zip(y.coords, y.tiles)}
        want = naive_strength(xc, yc, dx, dy, ts)
        if want is None:
            with pytest.raises(OverlapError):
                attachment_strength(x, y, Placement(dx, dy), ts)
        else:
            assert attachment_strength(x, y, Placement(dx, dy), ts) == want
        checked += 1
