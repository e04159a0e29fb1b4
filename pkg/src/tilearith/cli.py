"""Command-line interface for tilearith."""

from __future__ import annotations

import argparse
import os
import re
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from tilearith.errors import (
    CompileError,
    DecodeError,
    ExpressionError,
    InvalidTraceError,
    ModelError,
)
from tilearith.render import RenderStyle
from tilearith.simulator import Order
from tilearith.specs import AdditionVariant, MultiplicationSpec

CONFIG_NAME = "tilearith.toml"
OUTPUT_DIR_ENV = "TILEARITH_OUTPUT_DIR"

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 2
EXIT_COMPILE = 3
EXIT_SIMULATE = 4
EXIT_DECODE = 5


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Resolved options for one invocation."""

    expression: str
    variant: AdditionVariant
    emit: bool
    simulate: bool
    render_file: Path | None
    style: RenderStyle
    max_steps: int | None
    temperature: int
    order: Order
    trace_file: Path | None
    manifest_file: Path | None
    output_dir: Path
    debug: bool


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser (separate function for testability)."""
    p = argparse.ArgumentParser(
        prog="tilearith",
        description="Compile arithmetic into aTAM tile systems and simulate them",
        epilog=(
            "An expression may start with a minus sign when it comes first, as in "
            "'tilearith -3+5 --simulate'. Elsewhere, put it after '--'."
        ),
    )
    p.add_argument(
        "expression",
        nargs="+",
        help="Expression, e.g. '12+6+2+4', '6-12+4-2 mod 3', '5*4*3', 'prime 5'",
    )
    p.add_argument(
        "--variant",
        choices=[v.value for v in AdditionVariant],
        default=None,
        help="Addition construction (default: eight)",
    )
    p.add_argument("--emit", action="store_true", help="Write an xgrow .tiles file")
    p.add_argument("--simulate", action="store_true", help="Grow and decode the result")
    p.add_argument("--render", metavar="FILE", help="Write a picture of the terminal assembly")
    p.add_argument(
        "--style",
        choices=[s.value for s in RenderStyle],
        default=None,
        help="Render style (default: text)",
    )
    p.add_argument("--max-steps", type=int, default=None, metavar="N", help="Attachment limit")
    p.add_argument("--temperature", type=int, default=None, metavar="N", help="Temperature")
    p.add_argument(
        "--order",
        choices=[o.value for o in Order],
        default=None,
        help="Frontier selection order (default: lex)",
    )
    p.add_argument("--trace", metavar="FILE", help="Write the attachment trace")
    p.add_argument("--manifest", metavar="FILE", help="Write the tile manifest")
    p.add_argument(
        "--config",
        metavar="FILE",
        help=f"Config file (default: auto-discover {CONFIG_NAME})",
    )
    p.add_argument("--output-dir", metavar="DIR", help="Directory for emitted files")
    p.add_argument("--debug", action="store_true", help="Dump the tile system and trace to stderr")
    return p


_NEGATIVE_LEAD = re.compile(r"-\d")
_OPTION = re.compile(r"--?[A-Za-z]")


def lift_expression(argv: list[str]) -> list[str]:
    """Move a leading expression that starts with a minus sign behind ``--``."""
    if not argv or "--" in argv or not _NEGATIVE_LEAD.match(argv[0]):
        return argv
    end = 1
    while end < len(argv) and not _OPTION.match(argv[end]):
        end += 1
    return [*argv[end:], "--", *argv[:end]]


def load_config(config_path: Path | None, cwd: Path) -> dict[str, Any]:
    """Load a TOML config file, returning an empty dict on missing/absent file."""
    path = config_path if config_path is not None else cwd / CONFIG_NAME

    if not path.is_file():
        return {}

    with open(path, "rb") as f:
        return tomllib.load(f)


def _section(config: Mapping[str, Any], name: str) -> Mapping[str, Any]:
    value = config.get(name)
    return value if isinstance(value, dict) else {}


def _choice(kind: type, value: object, where: str) -> Any:
    try:
        return kind(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid value {value!r} for {where}") from None


def _positive(value: object, where: str, *, allow_zero: bool = False) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise argparse.ArgumentTypeError(f"{where} must be an integer, got {value!r}")
    if value < 0 or (value == 0 and not allow_zero):
        raise argparse.ArgumentTypeError(f"{where} must be positive, got {value}")
    return value


def resolve_options(
    args: argparse.Namespace,
    environ: Mapping[str, str] | None = None,
    cwd: Path | None = None,
) -> RunConfig:
    """Merge defaults, config file, environment and CLI args into a RunConfig.

    Precedence: config file < environment < CLI flags.
    """
    environ = os.environ if environ is None else environ
    cwd = cwd or Path(".")
    config_path = Path(args.config) if args.config else None
    config = load_config(config_path, cwd)
    run = _section(config, "run")
    output = _section(config, "output")
    render = _section(config, "render")

    variant = _choice(AdditionVariant, args.variant or run.get("variant", "eight"), "variant")
    order = _choice(Order, args.order or run.get("order", "lex"), "order")
    style = _choice(RenderStyle, args.style or render.get("style", "text"), "style")

    temperature = _positive(run.get("temperature", 2), "run.temperature")
    if args.temperature is not None:
        temperature = _positive(args.temperature, "--temperature")

    # 0 selects the compiler's own limit.
    max_steps = _positive(run.get("max_steps", 0), "run.max_steps", allow_zero=True) or None
    if args.max_steps is not None:
        max_steps = _positive(args.max_steps, "--max-steps")

    output_dir = Path(str(output.get("dir", ".")))
    if environ.get(OUTPUT_DIR_ENV):
        output_dir = Path(environ[OUTPUT_DIR_ENV])
    if args.output_dir:
        output_dir = Path(args.output_dir)

    render_file = Path(args.render) if args.render else None
    trace_file = Path(args.trace) if args.trace else None
    if not (args.emit or args.simulate or render_file or trace_file or args.manifest):
        raise argparse.ArgumentTypeError("nothing to do: give --emit and/or --simulate")

    return RunConfig(
        expression=" ".join(args.expression),
        variant=variant,
        emit=args.emit,
        # rendering and tracing need a terminal assembly
        simulate=args.simulate or render_file is not None or trace_file is not None,
        render_file=render_file,
        style=style,
        max_steps=max_steps,
        temperature=temperature,
        order=order,
        trace_file=trace_file,
        manifest_file=Path(args.manifest) if args.manifest else None,
        output_dir=output_dir,
        debug=args.debug,
    )


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def run(config: RunConfig) -> int:
    """Parse, compile, emit and/or simulate one expression. Returns the exit code."""
    from tilearith.compiler import compile_expression, with_variant
    from tilearith.debug import dump_system, dump_trace
    from tilearith.decoder import decode, format_result
    from tilearith.manifest import dump_manifest
    from tilearith.parser import parse
    from tilearith.render import render
    from tilearith.simulator import format_trace, grow
    from tilearith.xgrow import emit_tiles, tiles_filename

    try:
        spec = with_variant(parse(config.expression), config.variant)
    except ExpressionError as exc:
        print(exc.format(), file=sys.stderr)
        return EXIT_PARSE

    if isinstance(spec.payload, MultiplicationSpec) and 0 in spec.payload.inputs:
        print("warning: zero operand, product is 0 without compiling", file=sys.stderr)
        if config.simulate:
            print("result=0")
        return EXIT_OK

    try:
        compiled = compile_expression(spec, config.temperature)
    except CompileError as exc:
        print(exc.format(), file=sys.stderr)
        return EXIT_COMPILE

    if config.debug:
        dump_system(compiled.system, file=sys.stderr)

    try:
        if config.emit:
            path = config.output_dir / tiles_filename(spec)
            _write(path, emit_tiles(compiled.system).text)
            print(path)
        if config.manifest_file:
            _write(config.manifest_file, dump_manifest(compiled.system))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    if not config.simulate:
        return EXIT_OK

    try:
        limit = config.max_steps or compiled.default_max_steps
        report = grow(compiled.system, limit, config.order)
    except (ModelError, InvalidTraceError) as exc:
        print(exc.format(), file=sys.stderr)
        return EXIT_SIMULATE

    if config.debug:
        dump_trace(report, file=sys.stderr)

    try:
        if config.trace_file:
            _write(config.trace_file, format_trace(report.trace))
        if config.render_file:
            _write(config.render_file, render(report.terminal, compiled.system, config.style))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    if not report.halted:
        print(f"error: growth did not halt within {report.steps} steps", file=sys.stderr)
        return EXIT_SIMULATE
    if not report.deterministic:
        sites = ", ".join(f"{x},{y}" for x, y in report.conflicts[:5])
        print(f"error: nondeterministic growth at {sites}", file=sys.stderr)
        return EXIT_SIMULATE

    try:
        result = decode(spec.kind, report.terminal, compiled.layout)
    except DecodeError as exc:
        print(exc.format(), file=sys.stderr)
        return EXIT_DECODE

    for line in format_result(result):
        print(line)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """CLI entry point. Returns the exit code. Does not call sys.exit()."""
    parser = build_parser()
    args = parser.parse_args(lift_expression(sys.argv[1:] if argv is None else argv))

    try:
        config = resolve_options(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, tomllib.TOMLDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    return run(config)
