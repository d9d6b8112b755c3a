import random

from tilestage.core import GlueTable, Tile, TileSet, canonicalize
from tilestage.engine import (
    Bin,
    ClosureBudget,
    produce_closure,
    unique_production,
    uniquely_assembles_shape,
    witness_trace,
)
from tilestage.verify import Shape
from helpers import random_glues, random_supertile, random_tileset
from oracle import naive_closure, of_supertile


def fresh(seeds, tau, ts, size=100, count=10_000):
    return produce_closure(Bin(seeds, tau), ts, ClosureBudget(size, count))


def test_inert_tile_is_its_own_terminal():
    ts = TileSet(GlueTable(), [Tile("t")])
    st = canonicalize({(0, 0): "t"}, ts)
    res = fresh([st], 1, ts)
    assert res.complete
    assert list(res.produced.values()) == [st]
    assert res.terminal == [st]
    assert unique_production(res)


def test_self_extending_tile_exceeds_budget():
    glues = GlueTable({"a": 1})
    ts = TileSet(glues, [Tile("t", e="a", w="a")])
    st = canonicalize({(0, 0): "t"}, ts)
    res = fresh([st], 1, ts, size=8)
    assert not res.complete
    assert res.exceeded == "size"
    assert not unique_production(res)
    # bounded fixed point: every line length 1..8 is produced
    lengths = sorted(s.size for s in res.produced.values())
    assert lengths == list(range(1, 9))


def test_two_tile_line_unique():
    glues = GlueTable({"c": 1})
    ts = TileSet(glues, [Tile("l", e="c"), Tile("r", w="c")])
    a = canonicalize({(0, 0): "l"}, ts)
    b = canonicalize({(0, 0): "r"}, ts)
    res = fresh([a, b], 1, ts)
    assert res.complete
    assert len(res.terminal) == 1
    assert res.terminal[0].size == 2
    assert unique_production(res)
    assert uniquely_assembles_shape(res, Shape([(0, 0), (1, 0)]))
    assert not uniquely_assembles_shape(res, Shape([(0, 0), (0, 1), (0, 2)]))
    trace = witness_trace(res, res.terminal[0])
    assert len(trace) == 1
    assert trace[0].result == res.terminal[0]


def test_closure_matches_oracle_on_random_bins():
    rng = random.Random(29)
    checked = 0
    while checked < 25:
        ts = random_tileset(rng, random_glues(rng, 3, max_strength=2), 4)
        n_seeds = rng.randint(1, 4)
        seeds = [random_supertile(rng, ts, rng.randint(1, 5)) for _ in range(n_seeds)]
        tau = rng.randint(1, 2)
        budget = ClosureBudget(8, 90)
        res = produce_closure(Bin(seeds, tau), ts, budget)
        if res.exceeded == "count":
            continue  # keep the naive side tractable
        checked += 1
        seeds_c = [
            {(int(a), int(b)): int(t) for (a, b), t in zip(s.coords, s.tiles)}
            for s in seeds
        ]
        oprod, oterm, ocomp = naive_closure(seeds_c, tau, ts, 8)
        assert res.complete == ocomp
        assert {of_supertile(s) for s in res.produced.values()} == set(oprod)
        if res.complete:
            assert {of_supertile(s) for s in res.terminal} == oterm


def test_closure_deterministic_under_seed_order():
    rng = random.Random(31)
    ts = random_tileset(rng, random_glues(rng, 2), 3)
    seeds = [random_supertile(rng, ts, rng.randint(1, 4)) for _ in range(4)]
    a = fresh(list(seeds), 1, ts, size=12)
    b = fresh(list(reversed(seeds)), 1, ts, size=12)
    assert set(a.produced) == set(b.produced)
    assert {s.key for s in a.terminal} == {s.key for s in b.terminal}
    assert a.complete == b.complete
