"""Dispatch from a parsed expression to the matching tile construction."""

from __future__ import annotations

from dataclasses import replace

from tilearith.addition import compile_addition
from tilearith.errors import CompileError
from tilearith.multiplication import compile_mul
from tilearith.primality import compile_prime
from tilearith.signed import compile_addsub, compile_modexpr
from tilearith.specs import (
    AdditionSpec,
    AdditionVariant,
    Compiled,
    ExpressionKind,
    ExpressionSpec,
    MultiplicationSpec,
    PrimalitySpec,
    SignedExpressionSpec,
)


def with_variant(spec: ExpressionSpec, variant: AdditionVariant) -> ExpressionSpec:
    """Select the addition construction; other kinds are returned unchanged."""
    if isinstance(spec.payload, AdditionSpec):
        return replace(spec, payload=replace(spec.payload, variant=variant))
    return spec


def compile_expression(spec: ExpressionSpec, temperature: int | None = None) -> Compiled:
    match spec.kind, spec.payload:
        case ExpressionKind.ADD, AdditionSpec() as payload:
            compiled = compile_addition(payload)
        case ExpressionKind.MUL, MultiplicationSpec() as payload:
            compiled = compile_mul(payload)
        case ExpressionKind.SIGNED, SignedExpressionSpec() as payload:
            compiled = compile_addsub(payload)
        case ExpressionKind.SIGNED_MOD, SignedExpressionSpec() as payload:
            compiled = compile_modexpr(payload)
        case ExpressionKind.PRIME, PrimalitySpec() as payload:
            compiled = compile_prime(payload)
        case _:
            raise CompileError(f"no construction for {spec.kind.value} expressions")
    if temperature is not None and temperature != compiled.system.temperature:
        compiled = replace(compiled, system=replace(compiled.system, temperature=temperature))
    return compiled
