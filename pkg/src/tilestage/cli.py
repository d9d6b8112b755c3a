"""Command-line driver: generate, run, verify, and measure staged systems.

Exit codes: 0 success, 1 parse error, 2 semantic error, 3 budget exceeded,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dsl import (
    DslSemanticError,
    DslSyntaxError,
    parse_shape,
    parse_system,
    serialize_system,
)
from .engine import ClosureBudget
from .render import render_ascii, render_svg
from .staged import ExecutionAborted, InvalidSystem, execute, metrics, system_trace
from .verify import Shape, is_fully_connected, is_planar_system, shape_equals

EXIT_PARSE = 1
EXIT_SEMANTIC = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_system(path: str):
    try:
        return parse_system(_read_text(path))
    except DslSyntaxError as e:
        for d in e.diagnostics:
            print(f"parse error: {d}", file=sys.stderr)
        sys.exit(EXIT_PARSE)
    except DslSemanticError as e:
        for d in e.diagnostics:
            print(f"semantic error: {d}", file=sys.stderr)
        sys.exit(EXIT_SEMANTIC)


def _budget(args) -> ClosureBudget:
    return ClosureBudget(args.budget_size, args.budget_count)


def _execute(system, budget):
    try:
        return execute(system, budget)
    except InvalidSystem as e:
        for d in e.diagnostics:
            print(f"semantic error: {d}", file=sys.stderr)
        sys.exit(EXIT_SEMANTIC)
    except ExecutionAborted as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        sys.exit(EXIT_BUDGET)


def _gen(args) -> int:
    from . import constructions as C

    name = args.construction
    if name == "line":
        result = C.gen_line(args.n)
    elif name == "line-pow2":
        result = C.gen_line_pow2(args.k)
    elif name == "square-jigsaw":
        result = C.gen_square_jigsaw(args.n)
    elif name == "counter":
        result = C.gen_counter(args.k)
    elif name == "crazy-string":
        result = C.gen_crazy_string(args.bits, args.bins)
    elif name in ("spanning-tree", "scale2", "monotone"):
        if not args.shape:
            print("this construction needs --shape", file=sys.stderr)
            return 2
        shape = parse_shape(_read_text(args.shape))
        gen = {
            "spanning-tree": C.gen_spanning_tree,
            "scale2": C.gen_scale2,
            "monotone": C.gen_monotone,
        }[name]
        result = gen(shape)
    elif name == "simulation":
        if not args.system:
            print("simulation needs --system FILE", file=sys.stderr)
            return 2
        base = _load_system(args.system)
        result = C.gen_simulation(base)
    else:  # pragma: no cover - argparse restricts choices
        return 2
    text = serialize_system(result.system)
    if args.output and args.output != "-":
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _run(args) -> int:
    system = _load_system(args.file)
    ex = _execute(system, _budget(args))
    out = ex.output
    for i, st in enumerate(out.terminal):
        x0, y0, x1, y1 = st.bbox()
        print(f"terminal {i}: {x1 - x0 + 1}x{y1 - y0 + 1}, {st.size} tiles")
        if args.render:
            sys.stdout.write(render_ascii(st, system.tiles))
    print(f"complete: {str(out.complete).lower()}")
    print(f"unique: {str(out.unique).lower()}")
    if args.trace:
        lines = []
        for st in out.terminal:
            for ev in system_trace(ex, st):
                p = ev.placement
                lines.append(
                    f"attach {ev.left.size}+{ev.right.size} at ({p.dx},{p.dy}) "
                    f"-> {ev.result.size}"
                )
        Path(args.trace).write_text("\n".join(lines) + "\n")
    if not out.complete:
        print(f"budget exceeded: {out.exceeded}", file=sys.stderr)
        return EXIT_BUDGET
    return 0


def _verify(args) -> int:
    system = _load_system(args.file)
    ex = _execute(system, _budget(args))
    out = ex.output
    if not out.complete:
        print(f"budget exceeded: {out.exceeded}", file=sys.stderr)
        return EXIT_BUDGET
    failures: list[str] = []
    if args.target:
        target = parse_shape(_read_text(args.target))
        if not out.unique or len(out.terminal) != 1:
            failures.append(
                f"expected a unique terminal supertile, found {len(out.terminal)}"
            )
        elif not shape_equals(target, Shape.of(out.terminal[0]), args.scale):
            failures.append(f"terminal shape differs from target (scale {args.scale})")
    if args.connectivity and out.terminal:
        for st in out.terminal:
            full = is_fully_connected(st, system.tiles)
            if args.connectivity == "full" and not full:
                failures.append("terminal supertile is not fully connected")
            if args.connectivity == "partial" and full:
                failures.append("terminal supertile is unexpectedly fully connected")
    if args.planar:
        for st in out.terminal:
            if not is_planar_system(system_trace(ex, st)):
                failures.append("witness derivation contains a nonplanar attachment")
    for f in failures:
        print(f"verification failed: {f}", file=sys.stderr)
    if failures:
        return EXIT_VERIFY
    print("ok")
    return 0


def _metrics(args) -> int:
    system = _load_system(args.file)
    print(metrics(system))
    return 0


def _render(args) -> int:
    system = _load_system(args.file)
    ex = _execute(system, _budget(args))
    for st in ex.output.terminal:
        if args.format == "svg":
            sys.stdout.write(render_svg(st, system.tiles))
        else:
            sys.stdout.write(render_ascii(st, system.tiles))
    return 0


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="tilestage")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a construction as DSL text")
    g.add_argument(
        "construction",
        choices=[
            "line",
            "line-pow2",
            "square-jigsaw",
            "spanning-tree",
            "scale2",
            "monotone",
            "counter",
            "crazy-string",
            "simulation",
        ],
    )
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--bits", type=str, default="1011")
    g.add_argument("--bins", type=int, default=4, help="bin budget B")
    g.add_argument("--shape", type=str, help="shape document file")
    g.add_argument("--system", type=str, help="one-stage system to simulate")
    g.add_argument("-o", "--output", type=str, default="-")
    g.set_defaults(func=_gen)

    def add_budget(p):
        p.add_argument("--budget-size", type=int, default=10_000)
        p.add_argument("--budget-count", type=int, default=100_000)

    r = sub.add_parser("run", help="execute a system and print its terminals")
    r.add_argument("file")
    add_budget(r)
    r.add_argument("--trace", type=str, help="write the witness derivation here")
    r.add_argument("--render", action="store_true", help="ascii-render terminals")
    r.set_defaults(func=_run)

    v = sub.add_parser("verify", help="check a system against a target")
    v.add_argument("file")
    v.add_argument("--target", type=str, help="shape document file")
    v.add_argument("--scale", type=int, default=1)
    v.add_argument("--connectivity", choices=["full", "partial"])
    v.add_argument("--planar", action="store_true")
    add_budget(v)
    v.set_defaults(func=_verify)

    m = sub.add_parser("metrics", help="print complexity counts")
    m.add_argument("file")
    m.set_defaults(func=_metrics)

    d = sub.add_parser("render", help="render terminal supertiles")
    d.add_argument("file")
    d.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    add_budget(d)
    d.set_defaults(func=_render)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
