import pytest

from tilestage.constructions.lines import gen_line, gen_line_pow2
from tilestage.engine import ClosureBudget
from tilestage.staged import execute, metrics, system_trace, validate
from tilestage.verify import Shape, is_fully_connected, is_planar_system


def run(gen_result, budget_cells):
    assert validate(gen_result.system) == []
    return execute(gen_result.system, ClosureBudget(budget_cells, 4000))


@pytest.mark.parametrize("k", range(0, 6))
def test_pow2_line_unique_and_bounded(k):
    r = gen_line_pow2(k)
    ex = run(r, 4 * 2**k + 8)
    assert ex.output.unique
    assert len(ex.output.terminal) == 1
    line = ex.output.terminal[0]
    assert Shape.of(line) == Shape([(i, 0) for i in range(2**k)])
    assert is_fully_connected(line, r.system.tiles)
    m = metrics(r.system)
    assert m.glue_count <= 3
    assert m.tile_count <= 6
    assert m.bin_count <= 6
    assert m.stage_count <= k + 2


def test_pow2_intermediate_lines_have_distinct_end_glues():
    r = gen_line_pow2(4)
    ex = run(r, 80)
    ts = r.system.tiles
    for (stage, name), br in ex.bins.items():
        for st in br.terminal:
            edges = st.boundary_edges(ts)
            west = {g for _, _, g in edges[3]}
            east = {g for _, _, g in edges[1]}
            assert len(west) == 1 and len(east) == 1
            assert west != east


@pytest.mark.parametrize("n", [1, 2, 3, 5, 10, 13, 21, 37, 64])
def test_line_n_unique_planar_and_bounded(n):
    r = gen_line(n)
    ex = run(r, 4 * n + 8)
    assert ex.output.unique
    assert len(ex.output.terminal) == 1
    line = ex.output.terminal[0]
    assert Shape.of(line) == Shape([(i, 0) for i in range(n)])
    assert is_fully_connected(line, r.system.tiles)
    m = metrics(r.system)
    assert m.glue_count <= 3
    if n >= 2:
        assert m.glue_count == 3
    assert m.tile_count <= 6
    assert m.bin_count <= 7
    trace = system_trace(ex, line)
    assert is_planar_system(trace)


def test_line_every_bin_uniquely_produces():
    r = gen_line(37)
    ex = run(r, 160)
    for (stage, name), br in ex.bins.items():
        assert br.complete
        assert len(br.terminal) == 1, (stage, name, len(br.terminal))
