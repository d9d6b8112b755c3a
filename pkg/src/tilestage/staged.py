"""Staged assembly systems: mix graphs, validation, execution, metrics.

A system is a sequence of stages, each holding named bins.  A bin seeds
itself with the terminal supertiles poured from named bins of the previous
stage plus any tiles added at that stage; every bin self-assembles to its
terminal set before the next stage begins.  Pouring one bin into several
successors duplicates its terminal set.  The distinguished output node
collects the final pours and closes once more.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import GlueTable, Supertile, TileSet, canonicalize
from .engine import Bin, BinResult, ClosureBudget, produce_closure
from .verify import AttachmentEvent

OUTPUT = "output"


@dataclass
class BinDecl:
    sources: list[str] = field(default_factory=list)
    adds: list[str] = field(default_factory=list)

    def normalized(self) -> "BinDecl":
        return BinDecl(sorted(set(self.sources)), sorted(set(self.adds)))


@dataclass
class StagedSystem:
    name: str
    temperature: int
    glues: GlueTable
    tiles: TileSet
    stages: list[dict[str, BinDecl]]
    outputs: list[str]

    def __post_init__(self):
        self.stages = [
            {name: stage[name].normalized() for name in sorted(stage)}
            for stage in self.stages
        ]
        self.outputs = sorted(set(self.outputs))

    def structurally_equals(self, other: "StagedSystem") -> bool:
        return (
            self.name == other.name
            and self.temperature == other.temperature
            and self.glues == other.glues
            and sorted(self.tiles.tiles) == sorted(other.tiles.tiles)
            and self.stages == other.stages
            and self.outputs == other.outputs
        )


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    stage: int | None = None  # 1-based
    bin: str | None = None

    def __str__(self) -> str:
        loc = ""
        if self.stage is not None:
            loc = f" [stage {self.stage}" + (f", bin {self.bin}]" if self.bin else "]")
        return f"{self.code}: {self.message}{loc}"


@dataclass(frozen=True)
class Metrics:
    glue_count: int
    tile_count: int
    bin_count: int
    stage_count: int
    temperature: int

    def __str__(self) -> str:
        return (
            f"glues={self.glue_count} tiles={self.tile_count} "
            f"bins={self.bin_count} stages={self.stage_count} "
            f"temperature={self.temperature}"
        )


class InvalidSystem(Exception):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


class ExecutionAborted(Exception):
    """An incomplete bin lies on a path to the output node."""

    def __init__(self, stage: int | str, bin_name: str, result: BinResult, partial):
        self.stage = stage
        self.bin = bin_name
        self.result = result
        self.partial = partial
        super().__init__(
            f"bin ({stage}, {bin_name}) exceeded budget ({result.exceeded})"
        )


def validate(system: StagedSystem) -> list[Diagnostic]:
    """Mix-graph shape, glue references, and temperature bound checks."""
    diags: list[Diagnostic] = []
    if system.temperature < 1:
        diags.append(Diagnostic("InvalidTemperature", "temperature must be >= 1"))
    for label, s in system.glues.items():
        if s < 1:
            diags.append(
                Diagnostic("ZeroStrengthGlue", f"glue {label!r} has strength {s}")
            )
        elif s > system.temperature:
            diags.append(
                Diagnostic(
                    "GlueStrengthExceedsTemperature",
                    f"glue {label!r} has strength {s} > {system.temperature}",
                )
            )
    all_names = [set(stage) for stage in system.stages]
    for i, stage in enumerate(system.stages):
        for name, decl in stage.items():
            for tname in decl.adds:
                if tname not in system.tiles.index:
                    diags.append(
                        Diagnostic(
                            "UnknownTile", f"tile {tname!r} undeclared", i + 1, name
                        )
                    )
            for src in decl.sources:
                if i == 0 or src not in all_names[i - 1]:
                    elsewhere = any(src in names for names in all_names)
                    code = "InvalidEdge" if elsewhere else "UnknownBin"
                    diags.append(
                        Diagnostic(
                            code,
                            f"bin {name!r} pours from {src!r} which is not in stage {i}",
                            i + 1,
                            name,
                        )
                    )
    if not system.outputs:
        diags.append(Diagnostic("NoOutput", "output node has no incoming edge"))
    else:
        last = all_names[-1] if all_names else set()
        for src in system.outputs:
            if src not in last:
                elsewhere = any(src in names for names in all_names)
                code = "InvalidEdge" if elsewhere else "UnknownBin"
                diags.append(
                    Diagnostic(
                        code, f"output pours from {src!r} which is not in the last stage"
                    )
                )
    return diags


def metrics(system: StagedSystem) -> Metrics:
    """Glue/tile/bin/stage counts per the staged-assembly cost model."""
    used_tiles: set[str] = set()
    active_per_stage: list[int] = []
    active_stages = 0
    for stage in system.stages:
        active = 0
        for name, decl in stage.items():
            if decl.adds or decl.sources:
                active += 1
                used_tiles.update(decl.adds)
        active_per_stage.append(active)
        if active:
            active_stages += 1
    used_glues: set[str] = set()
    for tname in used_tiles:
        tile = system.tiles.tiles[system.tiles.index[tname]]
        for label in tile.sides:
            if label != "null":
                used_glues.add(label)
    return Metrics(
        glue_count=len(used_glues),
        tile_count=len(used_tiles),
        bin_count=max(active_per_stage, default=0),
        stage_count=active_stages,
        temperature=system.temperature if used_tiles else 0,
    )


@dataclass
class ExecutionResult:
    system: StagedSystem
    bins: dict[tuple[int, str], BinResult]
    output: BinResult

    def terminal_supertiles(self) -> list[Supertile]:
        return self.output.terminal


def _singleton(system: StagedSystem, tile_name: str, cache: dict) -> Supertile:
    st = cache.get(tile_name)
    if st is None:
        st = canonicalize({(0, 0): tile_name}, system.tiles)
        cache[tile_name] = st
    return st


def _on_path_bins(system: StagedSystem) -> set[tuple[int, str]]:
    """Bins from which the output node is reachable."""
    on_path: set[tuple[int, str]] = set()
    frontier = {(len(system.stages), name) for name in system.outputs}
    while frontier:
        on_path |= frontier
        nxt: set[tuple[int, str]] = set()
        for stage_no, name in frontier:
            decl = system.stages[stage_no - 1].get(name)
            if decl is None:
                continue
            for src in decl.sources:
                nxt.add((stage_no - 1, src))
        frontier = nxt - on_path
    return on_path


def execute(
    system: StagedSystem,
    budget: ClosureBudget | None = None,
) -> ExecutionResult:
    """Run every stage; returns per-bin results plus the output node's."""
    diags = validate(system)
    if diags:
        raise InvalidSystem(diags)
    budget = budget or ClosureBudget()
    on_path = _on_path_bins(system)
    cache: dict[str, Supertile] = {}
    results: dict[tuple[int, str], BinResult] = {}
    prev: dict[str, BinResult] = {}
    for i, stage in enumerate(system.stages, start=1):
        cur: dict[str, BinResult] = {}
        for name, decl in stage.items():
            seeds: list[Supertile] = []
            seen: set[bytes] = set()
            for src in decl.sources:
                src_res = prev.get(src)
                if src_res is None:
                    continue
                for st in src_res.terminal:
                    if st.key not in seen:
                        seen.add(st.key)
                        seeds.append(st)
            for tname in decl.adds:
                st = _singleton(system, tname, cache)
                if st.key not in seen:
                    seen.add(st.key)
                    seeds.append(st)
            if not seeds:
                continue
            res = produce_closure(Bin(seeds, system.temperature), system.tiles, budget)
            results[(i, name)] = res
            cur[name] = res
            if not res.complete and (i, name) in on_path:
                raise ExecutionAborted(i, name, res, results)
        prev = cur

    out_seeds: list[Supertile] = []
    seen: set[bytes] = set()
    for src in system.outputs:
        src_res = prev.get(src)
        if src_res is None:
            continue
        for st in src_res.terminal:
            if st.key not in seen:
                seen.add(st.key)
                out_seeds.append(st)
    output = produce_closure(Bin(out_seeds, system.temperature), system.tiles, budget)
    return ExecutionResult(system, results, output)


def system_trace(execution: ExecutionResult, target: Supertile) -> list[AttachmentEvent]:
    """One full derivation of an output terminal across all stages' bins.

    Shared sub-assemblies are traced once; the event list is in a valid
    assembly order (children before parents).
    """
    system = execution.system
    r = len(system.stages)
    out: list[AttachmentEvent] = []
    done: set[tuple[int, str | None, bytes]] = set()

    def predecessors(stage_no: int, name: str | None) -> list[tuple[int, str]]:
        if name is None:
            return [(r, src) for src in system.outputs]
        decl = system.stages[stage_no - 1][name]
        return [(stage_no - 1, src) for src in decl.sources]

    def walk(stage_no: int, name: str | None, key: bytes) -> None:
        tag = (stage_no, name, key)
        if tag in done:
            return
        done.add(tag)
        res = execution.output if name is None else execution.bins[(stage_no, name)]
        ev = res.events.get(key)
        if ev is not None:
            walk(stage_no, name, ev.left.key)
            walk(stage_no, name, ev.right.key)
            out.append(ev)
            return
        # a seed of this bin: find a producing predecessor, if any
        for p_stage, p_name in predecessors(stage_no, name):
            p_res = execution.bins.get((p_stage, p_name))
            if p_res is None:
                continue
            if key in p_res.produced and any(t.key == key for t in p_res.terminal):
                walk(p_stage, p_name, key)
                return
        # otherwise it's an added single tile: leaf

    if target.key not in execution.output.produced:
        raise KeyError("target is not produced by the output node")
    walk(r + 1, None, target.key)
    return out
