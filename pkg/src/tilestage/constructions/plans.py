"""Compile a DAG of piece-merging steps into a staged system.

Generators describe *what* gets mixed (leaf tiles and merge nodes whose
children are poured together); the compiler assigns stages as late as
possible, inserts pass-through carry bins where a piece must wait for its
consumer, dedupes identical pieces into shared bins, and emits the final
mix graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import GlueTable, Supertile, Tile, TileSet, canonicalize
from ..staged import BinDecl, StagedSystem
from ..verify import Shape


@dataclass(eq=False)
class Node:
    piece: Supertile
    tile: str | None = None  # set for leaves
    children: list["Node"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return self.tile is not None


@dataclass
class GenResult:
    """A generated system plus its declared target for verification."""

    system: StagedSystem
    target: Shape | None
    scale: int = 1
    meta: dict = field(default_factory=dict)


class Plan:
    """Piece DAG under construction; nodes are deduplicated by piece."""

    def __init__(self, glues: GlueTable, name: str, temperature: int = 1):
        self.name = name
        self.temperature = temperature
        self.glues = glues
        self.ts = TileSet(glues)
        self.nodes: dict[bytes, Node] = {}
        self.roots: list[Node] = []

    def tile(self, tile: Tile) -> Node:
        """A leaf: one tile type, added straight into its consumer's bin."""
        self.ts.add(tile)
        piece = canonicalize({(0, 0): tile.name}, self.ts)
        node = self.nodes.get(piece.key)
        if node is None:
            node = Node(piece, tile=tile.name)
            self.nodes[piece.key] = node
        return node

    def merge(self, children: list[Node], cells: dict) -> Node:
        """A bin pouring `children` together; `cells` is its unique terminal."""
        piece = canonicalize(cells, self.ts)
        node = self.nodes.get(piece.key)
        if node is None:
            node = Node(piece, children=list(children))
            self.nodes[piece.key] = node
        return node

    def root(self, node: Node) -> None:
        if node not in self.roots:
            self.roots.append(node)

    def compile(self) -> StagedSystem:
        if not self.roots:
            raise ValueError("plan has no roots")

        # wrap leaf roots so the output node pours from a real bin
        roots: list[Node] = []
        extra: list[Node] = []
        for r in self.roots:
            if r.is_leaf:
                w = Node(r.piece, children=[r])
                extra.append(w)
                roots.append(w)
            else:
                roots.append(r)

        order: list[Node] = []
        seen: set[int] = set()

        def topo(n: Node) -> None:
            if id(n) in seen:
                return
            seen.add(id(n))
            for c in n.children:
                topo(c)
            order.append(n)

        for r in roots:
            topo(r)

        # earliest feasible stage per merge node
        asap: dict[int, int] = {}
        for n in order:
            if n.is_leaf:
                continue
            asap[id(n)] = 1 + max(
                (asap[id(c)] for c in n.children if not c.is_leaf), default=0
            )
        total = max(asap[id(r)] for r in roots)

        parents: dict[int, list[Node]] = {}
        for n in order:
            if n.is_leaf:
                continue
            for c in n.children:
                if not c.is_leaf:
                    parents.setdefault(id(c), []).append(n)

        # as late as possible, so intermediates are not stored needlessly
        stage_of: dict[int, int] = {}
        root_ids = {id(r) for r in roots}
        for n in reversed(order):
            if n.is_leaf:
                continue
            ps = parents.get(id(n), [])
            if ps:
                s = min(stage_of[id(p)] for p in ps) - 1
            else:
                s = total
            if id(n) in root_ids:
                s = min(s, total)
            stage_of[id(n)] = max(asap[id(n)], s)

        names: dict[tuple[int, bytes], str] = {}
        decls: dict[tuple[int, bytes], BinDecl] = {}
        counter = [0] * (total + 2)

        def bin_name(stage: int, key: bytes) -> str:
            tag = (stage, key)
            if tag not in names:
                counter[stage] += 1
                names[tag] = f"b{counter[stage]}"
            return names[tag]

        def ensure_available(n: Node, at_stage: int) -> str:
            """Name of a bin holding n's piece at `at_stage`, carrying forward."""
            made = stage_of[id(n)]
            name = bin_name(made, n.piece.key)
            for s in range(made + 1, at_stage + 1):
                tag = (s, n.piece.key)
                if tag not in decls:
                    prev = names[(s - 1, n.piece.key)]
                    name = bin_name(s, n.piece.key)
                    decls[tag] = BinDecl([prev], [])
                else:
                    name = names[tag]
            return name

        for n in order:
            if n.is_leaf:
                continue
            s = stage_of[id(n)]
            sources: list[str] = []
            adds: list[str] = []
            for c in n.children:
                if c.is_leaf:
                    adds.append(c.tile)  # type: ignore[arg-type]
                else:
                    sources.append(ensure_available(c, s - 1))
            decls[(s, n.piece.key)] = BinDecl(sources, adds)
            bin_name(s, n.piece.key)

        outputs = [ensure_available(r, total) for r in roots]

        stages: list[dict[str, BinDecl]] = [dict() for _ in range(total)]
        for (s, key), decl in decls.items():
            stages[s - 1][names[(s, key)]] = decl
        return StagedSystem(
            self.name,
            self.temperature,
            self.glues,
            self.ts,
            stages,
            sorted(set(outputs)),
        )
