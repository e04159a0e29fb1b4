"""Compile arithmetic into aTAM tile systems, grow them and read off the answer."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from tilearith.decoder import DecodedResult
    from tilearith.specs import AdditionVariant

__version__ = "0.1.0"


def evaluate(text: str, variant: AdditionVariant | None = None) -> DecodedResult:
    """Parse, compile, grow and decode an expression such as ``12+6+2+4``."""
    from tilearith.compiler import compile_expression, with_variant
    from tilearith.decoder import decode
    from tilearith.errors import ModelError
    from tilearith.parser import parse
    from tilearith.simulator import grow

    spec = parse(text)
    if variant is not None:
        spec = with_variant(spec, variant)
    compiled = compile_expression(spec)
    report = grow(compiled.system, compiled.default_max_steps)
    if not report.halted:
        raise ModelError(f"growth did not halt within {report.steps} steps")
    return decode(spec.kind, report.terminal, compiled.layout)
