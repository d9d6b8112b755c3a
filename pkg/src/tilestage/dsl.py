"""Line-oriented text format for staged systems, plus shape documents.

Grammar (one declaration per line, ``#`` starts a comment):

    system <ident>
    temperature <int>
    glue <ident> strength <int>
    tile <ident> n=<glue> e=<glue> s=<glue> w=<glue>    # omitted side = null
    stage <int>
    bin <ident> [from <ident>{,<ident>}] [add <tile>{,<tile>}]
    output <ident>{,<ident>}

Bin names are scoped to their stage; ``from`` may only name bins of the
previous stage, which keeps every mix edge between consecutive stages by
construction.  Serialization is canonical (sorted declarations), so
parse(serialize(s)) is structurally s and rendering is byte-stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import NULL, GlueTable, Tile, TileSet
from .staged import BinDecl, StagedSystem
from .verify import Shape

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*$")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, col {self.column}: {self.message}"


class DslError(Exception):
    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


class DslSyntaxError(DslError):
    pass


class DslSemanticError(DslError):
    pass


def _split_names(raw: str) -> list[str]:
    return [p for p in (s.strip() for s in raw.split(",")) if p]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.syntax: list[ParseDiagnostic] = []
        self.semantic: list[ParseDiagnostic] = []
        self.name = "unnamed"
        self.temperature = 1
        self.glues = GlueTable()
        self.tiles: list[Tile] = []
        self.tile_names: set[str] = set()
        self.stages: list[dict[str, BinDecl]] = []
        self.outputs: list[str] = []
        self.saw_output = False

    def err(self, kind: str, line: int, col: int, msg: str) -> None:
        bucket = self.syntax if kind == "syntax" else self.semantic
        bucket.append(ParseDiagnostic(line, col, msg))

    def parse(self) -> StagedSystem:
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            self.line(lineno, line)
        if not self.saw_output:
            self.err("semantic", 0, 0, "missing output declaration")
        if self.syntax:
            raise DslSyntaxError(self.syntax)
        if self.semantic:
            raise DslSemanticError(self.semantic)
        ts = TileSet(self.glues)
        for t in self.tiles:
            ts.add(t)
        return StagedSystem(
            self.name, self.temperature, self.glues, ts, self.stages, self.outputs
        )

    def line(self, n: int, line: str) -> None:
        words = line.split()
        head = words[0]
        col = line.index(head) + 1
        if head == "system":
            if len(words) != 2 or not _IDENT.match(words[1]):
                self.err("syntax", n, col, "expected: system <ident>")
                return
            self.name = words[1]
        elif head == "temperature":
            if len(words) != 2 or not words[1].isdigit():
                self.err("syntax", n, col, "expected: temperature <int>")
                return
            self.temperature = int(words[1])
        elif head == "glue":
            if len(words) != 4 or words[2] != "strength" or not _IDENT.match(words[1]):
                self.err("syntax", n, col, "expected: glue <ident> strength <int>")
                return
            try:
                strength = int(words[3])
            except ValueError:
                self.err("syntax", n, line.rindex(words[3]) + 1, "expected an integer strength")
                return
            label = words[1]
            if label == NULL:
                if strength != 0:
                    self.err("semantic", n, col, "the null glue must have strength 0")
                return
            if label in self.glues:
                self.err("semantic", n, col, f"glue {label!r} declared twice")
                return
            if strength < 1:
                self.err("semantic", n, col, f"glue {label!r}: strength must be >= 1")
                return
            self.glues.add(label, strength)
        elif head == "tile":
            if len(words) < 2 or not _IDENT.match(words[1]):
                self.err("syntax", n, col, "expected: tile <ident> [n=| e=| s=| w=<glue>]")
                return
            name = words[1]
            sides = {"n": NULL, "e": NULL, "s": NULL, "w": NULL}
            ok = True
            for w in words[2:]:
                m = re.match(r"([nesw])=([A-Za-z0-9_.\-]+)$", w)
                if not m:
                    self.err("syntax", n, line.index(w) + 1, f"bad tile side {w!r}")
                    ok = False
                    continue
                side, glue = m.group(1), m.group(2)
                if glue != NULL and glue not in self.glues:
                    self.err("semantic", n, line.index(w) + 1, f"undeclared glue {glue!r}")
                    ok = False
                    continue
                sides[side] = glue
            if not ok:
                return
            if name in self.tile_names:
                self.err("semantic", n, col, f"tile {name!r} declared twice")
                return
            self.tile_names.add(name)
            self.tiles.append(Tile(name, sides["n"], sides["e"], sides["s"], sides["w"]))
        elif head == "stage":
            if len(words) != 2 or not words[1].isdigit():
                self.err("syntax", n, col, "expected: stage <int>")
                return
            num = int(words[1])
            if num != len(self.stages) + 1:
                self.err(
                    "semantic", n, col,
                    f"stage {num} out of order (expected {len(self.stages) + 1})",
                )
            self.stages.append({})
        elif head == "bin":
            if not self.stages:
                self.err("semantic", n, col, "bin declared before any stage")
                return
            if len(words) < 2 or not _IDENT.match(words[1]):
                self.err("syntax", n, col, "expected: bin <ident> [from ...] [add ...]")
                return
            name = words[1]
            rest = line.split(None, 2)[2] if len(words) > 2 else ""
            sources: list[str] = []
            adds: list[str] = []
            m = re.match(
                r"(?:from\s+(?P<from>[^\s]+(?:\s*,\s*[^\s]+)*?))?"
                r"\s*(?:add\s+(?P<add>.+))?$",
                rest.strip(),
            )
            if rest.strip() and (not m or (m.group("from") is None and m.group("add") is None)):
                self.err("syntax", n, col, f"bad bin clause {rest.strip()!r}")
                return
            if m and m.group("from"):
                sources = _split_names(m.group("from"))
            if m and m.group("add"):
                adds = _split_names(m.group("add"))
            cur = self.stages[-1]
            if name in cur:
                self.err("semantic", n, col, f"bin {name!r} declared twice in this stage")
                return
            prev = self.stages[-2] if len(self.stages) >= 2 else {}
            for src in sources:
                if src not in prev:
                    self.err(
                        "semantic", n, col,
                        f"bin {name!r} pours from {src!r}, not a previous-stage bin",
                    )
            for t in adds:
                if t not in self.tile_names:
                    self.err("semantic", n, col, f"undeclared tile {t!r}")
            cur[name] = BinDecl(sources, adds)
        elif head == "output":
            self.saw_output = True
            names = _split_names(line.split(None, 1)[1]) if len(words) > 1 else []
            if not names:
                self.err("syntax", n, col, "expected: output <ident>{,<ident>}")
                return
            last = self.stages[-1] if self.stages else {}
            for src in names:
                if src not in last:
                    self.err(
                        "semantic", n, col,
                        f"output pours from {src!r}, not a last-stage bin",
                    )
            self.outputs = names
        else:
            self.err("syntax", n, col, f"unknown declaration {head!r}")


def parse_system(text: str) -> StagedSystem:
    """Parse DSL text; raises DslSyntaxError / DslSemanticError with positions."""
    return _Parser(text).parse()


def serialize_system(system: StagedSystem) -> str:
    """Canonical text form: sorted declarations, stages in order."""
    out: list[str] = [f"system {system.name}", f"temperature {system.temperature}"]
    for label, strength in sorted(system.glues.items()):
        out.append(f"glue {label} strength {strength}")
    for tile in sorted(system.tiles.tiles):
        parts = [f"tile {tile.name}"]
        for side, label in zip("nesw", tile.sides):
            if label != NULL:
                parts.append(f"{side}={label}")
        out.append(" ".join(parts))
    for i, stage in enumerate(system.stages, start=1):
        out.append(f"stage {i}")
        for name in sorted(stage):
            decl = stage[name]
            parts = [f"bin {name}"]
            if decl.sources:
                parts.append("from " + ",".join(sorted(decl.sources)))
            if decl.adds:
                parts.append("add " + ",".join(sorted(decl.adds)))
            out.append(" ".join(parts))
    out.append("output " + ",".join(sorted(system.outputs)))
    return "\n".join(out) + "\n"


def parse_shape(text: str) -> Shape:
    """Grid of '#' (cell) and '.' (empty); first line is the top row."""
    rows = [r for r in text.splitlines() if r.strip() and not r.lstrip().startswith("#!")]
    rows = [r for r in rows if set(r.strip()) <= {"#", "."}]
    if not rows:
        raise DslSyntaxError([ParseDiagnostic(1, 1, "no shape rows ('#'/'.') found")])
    cells = set()
    height = len(rows)
    for r, row in enumerate(rows):
        for c, ch in enumerate(row):
            if ch == "#":
                cells.add((c, height - 1 - r))
    if not cells:
        raise DslSemanticError([ParseDiagnostic(1, 1, "shape has no '#' cells")])
    return Shape(cells)


def serialize_shape(shape: Shape) -> str:
    x0, y0, x1, y1 = shape.bbox()
    lines = []
    for y in range(y1, y0 - 1, -1):
        lines.append(
            "".join("#" if (x, y) in shape.cells else "." for x in range(x0, x1 + 1))
        )
    return "\n".join(lines) + "\n"
