"""Compiler inputs and outputs: operand specs, parsed expressions, result layouts."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from tilearith.bits import bit_length
from tilearith.model import Pos, TileSystem


class AdditionVariant(Enum):
    EIGHT_TILE = "eight"
    SIX_TILE = "six"
    L_TYPE = "l"


class ExpressionKind(Enum):
    ADD = "add"
    MUL = "mul"
    SIGNED = "signed"
    SIGNED_MOD = "signed-mod"
    PRIME = "prime"


@dataclass(frozen=True, slots=True)
class AdditionSpec:
    inputs: tuple[int, ...]
    variant: AdditionVariant = AdditionVariant.EIGHT_TILE

    @property
    def n(self) -> int:
        return len(self.inputs)

    @property
    def m(self) -> int:
        return max((bit_length(a) for a in self.inputs), default=1)

    @property
    def width(self) -> int:
        return self.n + self.m - 1


@dataclass(frozen=True, slots=True)
class MultiplicationSpec:
    inputs: tuple[int, ...]

    def ordered(self) -> tuple[int, ...]:
        """Operands with the first maximum-bit-length one moved to the front."""
        if not self.inputs:
            return ()
        lengths = [bit_length(a) for a in self.inputs]
        first = lengths.index(max(lengths))
        return (self.inputs[first], *self.inputs[:first], *self.inputs[first + 1 :])

    @property
    def width(self) -> int:
        return sum(bit_length(a) for a in self.inputs)


@dataclass(frozen=True, slots=True)
class SignedExpressionSpec:
    """Signed terms ``(sign, magnitude)``, sign +1 or -1, optionally taken mod ``modulus``."""

    terms: tuple[tuple[int, int], ...]
    modulus: int | None = None

    def normalized(self) -> tuple[tuple[int, int], ...]:
        """Terms as laid out by the compiler: a leading ``+0`` before a negative
        first term, and a trailing ``+0`` after a single term."""
        terms = self.terms
        if terms and terms[0][0] < 0:
            terms = ((1, 0), *terms)
        if len(terms) == 1:
            terms = (*terms, (1, 0))
        return terms

    @property
    def value(self) -> int:
        return sum(sign * magnitude for sign, magnitude in self.terms)


@dataclass(frozen=True, slots=True)
class PrimalitySpec:
    n: int


Payload = AdditionSpec | MultiplicationSpec | SignedExpressionSpec | PrimalitySpec


@dataclass(frozen=True, slots=True)
class ExpressionSpec:
    kind: ExpressionKind
    payload: Payload


# ---------------------------------------------------------------------------
# Compiler output
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ResultLayout:
    """Where and how the decoder reads an answer off a terminal assembly.

    ``result_columns`` lists x coordinates least significant bit first. With
    ``result_y`` set the bits sit on that row; with ``None`` the row
    is the only one holding tiles from ``bit_tiles``.
    """

    kind: ExpressionKind
    result_columns: tuple[int, ...] = ()
    result_y: int | None = None
    bit_tiles: Mapping[int, int] = field(default_factory=dict)
    sign_tiles: Mapping[int, int] = field(default_factory=dict)
    verdict_tiles: Mapping[int, bool] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class Compiled:
    spec: ExpressionSpec
    system: TileSystem
    layout: ResultLayout
    expected_area: int
    row_kinds: tuple[str, ...] = ()

    @property
    def default_max_steps(self) -> int:
        return 16 * self.expected_area

    def result_positions(self) -> tuple[Pos, ...]:
        if self.layout.result_y is None:
            return ()
        return tuple((x, self.layout.result_y) for x in self.layout.result_columns)


def _signed_terms(terms: tuple[tuple[int, int], ...]) -> str:
    return ",".join(f"{'-' if sign < 0 else ''}{magnitude}" for sign, magnitude in terms)


_VARIANT_TAGS = {
    AdditionVariant.EIGHT_TILE: "8",
    AdditionVariant.SIX_TILE: "6",
    AdditionVariant.L_TYPE: "L",
}


def tileset_name(spec: ExpressionSpec) -> str:
    """Name used for emitted tilesets, e.g. ``add_8_tile_12,6``."""
    payload = spec.payload
    match payload:
        case AdditionSpec(inputs=inputs, variant=variant):
            return f"add_{_VARIANT_TAGS[variant]}_tile_{','.join(map(str, inputs))}"
        case MultiplicationSpec(inputs=inputs):
            return f"mul_tile_{','.join(map(str, inputs))}"
        case SignedExpressionSpec(terms=terms, modulus=None):
            return f"addsub_tile_{_signed_terms(terms)}"
        case SignedExpressionSpec(terms=terms, modulus=modulus):
            return f"mod_{modulus}_tile_{_signed_terms(terms)}"
        case PrimalitySpec(n=n):
            return f"prime_tile_{n}"
    raise TypeError(f"unsupported payload {payload!r}")
