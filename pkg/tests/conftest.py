"""Shared test fixtures and helpers."""

from __future__ import annotations

import pytest

from tilearith.compiler import compile_expression, with_variant
from tilearith.decoder import DecodedResult, decode
from tilearith.model import Glue, TileSystem, TileType
from tilearith.parser import parse
from tilearith.simulator import SimulationReport, grow
from tilearith.specs import AdditionVariant, Compiled

# Every worked example, each with the addition variant it needs.
WORKED_EXAMPLES: list[tuple[str, AdditionVariant | None]] = [
    ("12+6+2+4", None),
    ("12+6+2+4", AdditionVariant.SIX_TILE),
    ("6+4+3+5", AdditionVariant.L_TYPE),
    ("5*4*3", None),
    ("6-12+4-2", None),
    ("6-12+4-2 mod 3", None),
    ("prime 5", None),
    ("prime 9", None),
]


def corner_system(temperature: int = 2) -> TileSystem:
    """Three-tile L-shaped seed with one tile type that fills the corner.

    The filler binds west to ``n`` and south to ``e``, one unit each, so it
    attaches only cooperatively at temperature 2.
    """
    glues = {name: Glue(name, 1) for name in ("x", "y", "n", "e")}
    tiles = (
        TileType(0, "S", north="x", east="y", color="black"),
        TileType(1, "N", south="x", east="n"),
        TileType(2, "E", west="y", north="e"),
        TileType(3, "T", west="n", south="e", color="red"),
    )
    seed = (((0, 0), 0), ((0, 1), 1), ((1, 0), 2))
    return TileSystem("corner", glues, tiles, seed, temperature)


def compile_text(text: str, variant: AdditionVariant | None = None) -> Compiled:
    spec = parse(text)
    if variant is not None:
        spec = with_variant(spec, variant)
    return compile_expression(spec)


def grow_compiled(compiled: Compiled, **kwargs) -> SimulationReport:
    kwargs.setdefault("max_steps", compiled.default_max_steps)
    return grow(compiled.system, **kwargs)


@pytest.fixture
def corner():
    return corner_system()


@pytest.fixture
def run():
    """Return a helper that compiles, grows and decodes an expression.

    The helper asserts the run halted deterministically before decoding.
    """

    def _run(text: str, variant: AdditionVariant | None = None) -> DecodedResult:
        compiled = compile_text(text, variant)
        report = grow_compiled(compiled)
        assert report.halted, f"{text}: growth did not halt"
        assert report.deterministic, f"{text}: conflicts at {report.conflicts[:3]}"
        return decode(compiled.spec.kind, report.terminal, compiled.layout)

    return _run
