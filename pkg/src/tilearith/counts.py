"""Closed-form tile counts for each construction, per tile family.

``types`` is the number of distinct tile types and ``overall`` the number of
tiles placed in the terminal assembly. For the 8- and 6-tile adders the
per-family type counts follow this package's frame layout; only the overall
counts are fixed. Multiplication, signed and primality rows depend on the row
program of the input and are computed from it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from tilearith.bits import bit_length
from tilearith.model import Assembly, TileSystem
from tilearith.multiplication import row_program as mul_rows
from tilearith.primality import row_program as prime_rows
from tilearith.signed import signed_width
from tilearith.specs import (
    AdditionSpec,
    AdditionVariant,
    MultiplicationSpec,
    Payload,
    PrimalitySpec,
    SignedExpressionSpec,
)


@dataclass(frozen=True, slots=True)
class TileCount:
    family: str
    types: int
    overall: int


def expected_tile_counts(spec: Payload) -> tuple[TileCount, ...]:
    match spec:
        case AdditionSpec(variant=AdditionVariant.L_TYPE):
            return _addition_l(spec)
        case AdditionSpec():
            return _addition(spec)
        case MultiplicationSpec():
            return _multiplication(spec)
        case SignedExpressionSpec():
            return _signed(spec)
        case PrimalitySpec():
            return _primality(spec)
    raise TypeError(f"unsupported spec {spec!r}")


def _addition(spec: AdditionSpec) -> tuple[TileCount, ...]:
    n, w = spec.n, spec.width
    computational = 6 if spec.variant is AdditionVariant.SIX_TILE else 8
    return (
        TileCount("left-frame", n - 1, 2 * n - 3),
        TileCount("corner", 4, 4),
        TileCount("right-frame", 2 * n - 3, 2 * n - 3),
        TileCount("top-frame", 2, w),
        TileCount("input", (2 * n - 3) * w, w * (n - 1)),
        TileCount("computational", computational, w * (n - 2)),
    )


def _addition_l(spec: AdditionSpec) -> tuple[TileCount, ...]:
    rows = sum(bit_length(a) for a in spec.inputs[1:])
    return (
        TileCount("left-frame", 1 + rows, 1 + rows),
        TileCount("right-frame", rows, rows),
        TileCount("top-frame", 2 + spec.width, 2 + spec.width),
    )


def _multiplication(spec: MultiplicationSpec) -> tuple[TileCount, ...]:
    w = spec.width
    h = len(mul_rows(spec.ordered()))
    return (
        TileCount("seed", 1, 1),
        TileCount("horizontal-frame", w, w),
        TileCount("corner", 3, 3),
        TileCount("vertical-frame", h, h),
        TileCount("left-frame", h, h),
        TileCount("top-frame", w, w),
        TileCount("computational", 20, w * h),
    )


def _signed(spec: SignedExpressionSpec) -> tuple[TileCount, ...]:
    terms = spec.normalized()
    n = len(terms)
    w = signed_width(terms, spec.modulus)
    adds = sum(1 for sign, _ in terms[1:] if sign > 0)
    subs = n - 1 - adds
    if spec.modulus is None:
        return (
            TileCount("corner", 4, 4),
            TileCount("input", (2 * n - 3) * w, (n - 1) * w),
            TileCount("left-frame", 3 * n + 2, 2 * n),
            TileCount("right-frame", 2 * n, 2 * n),
            TileCount("top-frame", w, w),
            TileCount("computational+", 8, adds * w),
            TileCount("computational-", 8, subs * w),
            TileCount("other-computational", 16, 3 * w),
        )
    rounds = abs(spec.value) // spec.modulus
    frame = 2 * n + 2 + 3 * rounds
    return (
        TileCount("corner", 4, 4),
        TileCount("input", (2 * n - 1) * w, n * w),
        TileCount("left-frame", 3 * n + 7, frame),
        TileCount("right-frame", 2 * n + 4, frame),
        TileCount("top-frame", 4, w),
        TileCount("computational+", 8, adds * w),
        TileCount("computational-", 16, (subs + rounds) * w),
        TileCount("other-computational", 16, 3 * w),
        TileCount("comparator", 12, (2 * rounds + 1) * w),
    )


def _primality(spec: PrimalitySpec) -> tuple[TileCount, ...]:
    w = bit_length(spec.n)
    rows = prime_rows(spec.n)
    kinds = Counter(rows)
    frame = len(rows) - 2
    return (
        TileCount("left-frame", 6, frame),
        TileCount("corner", 6, 4),
        TileCount("right-frame", 9, frame),
        TileCount("top-frame", 12, w),
        TileCount("input", w, w),
        TileCount("converter", 4, w),
        TileCount("check-k-gt-1", 12, kinds["check-k"] * w),
        TileCount("check-c-gt-b", 24, kinds["compare"] * w),
        TileCount("move", 4, kinds["move"] * w),
        TileCount("subtract-b-c", 16, kinds["subtract"] * w),
        TileCount("subtract-c-1", 16, kinds["decrement"] * w),
    )


# ---------------------------------------------------------------------------
# Measured counts
# ---------------------------------------------------------------------------


def type_counts(system: TileSystem) -> Counter[str]:
    return Counter(tile.family for tile in system.tiles)


def usage_counts(system: TileSystem, assembly: Assembly) -> Counter[str]:
    return Counter(system.tiles[tile_id].family for _, tile_id in assembly.items())
