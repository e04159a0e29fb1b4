"""n-input multiplication by shift-and-add rows.

Each interior tile carries a pair ``(x, y)``: ``x`` is the current
multiplicand bit and ``y`` the accumulator bit. The vertical frame walks the
bits of every operand after the first, least significant first: a set bit
inserts an add row (``y += x``), each step between bits inserts a shift row
(``x <<= 1``), and a copy row between operands moves the accumulator into the
multiplicand and clears it.
"""

from __future__ import annotations

from tilearith.bits import Orientation, bit, bit_length, encode_input, full_adder
from tilearith.builder import BIT_COLORS, SystemBuilder
from tilearith.errors import ArityError, DomainError
from tilearith.model import NULL
from tilearith.specs import (
    Compiled,
    ExpressionKind,
    ExpressionSpec,
    MultiplicationSpec,
    ResultLayout,
    tileset_name,
)


def row_program(operands: tuple[int, ...]) -> list[tuple[str, str]]:
    """Row kinds and frame labels above the bottom row, bottom to top."""
    program: list[tuple[str, str]] = []
    for k in range(1, len(operands)):
        a = operands[k]
        length = bit_length(a)
        for p in range(length):
            if bit(a, p):
                program.append(("add", f"1@a{k + 1}.{p}"))
            if p < length - 1:
                program.append(("shift", "<"))
        if k < len(operands) - 1:
            program.append(("copy", "|"))
    return program


def compile_mul(spec: MultiplicationSpec) -> Compiled:
    if len(spec.inputs) < 2:
        raise ArityError(f"multiplication needs at least 2 operands, got {len(spec.inputs)}")
    if any(a <= 0 for a in spec.inputs):
        raise DomainError("multiplication operands must be positive")

    expression = ExpressionSpec(ExpressionKind.MUL, spec)
    operands = spec.ordered()
    width = spec.width
    program = row_program(operands)
    height = len(program)

    b = SystemBuilder(tileset_name(expression), "mul")

    def pair(x: int, y: int) -> str:
        return b.glue(f"p{x}{y}")

    def chain(i: int) -> str:
        return b.glue(f"${i}", 2)

    def vertical(y: int) -> str:
        return b.glue(f"V{y}", 2)

    def left(y: int) -> str:
        return b.glue(f"L{y}")

    def carry(c: int) -> str:
        return b.glue(f"c{c}")

    def shifted(v: int) -> str:
        return b.glue(f"h{v}")

    row_glue = {"add": carry(0), "shift": shifted(0), "copy": b.glue("cp")}

    seed = b.tile("+", "seed", west=chain(0), north=vertical(1))
    b.seed((width, 0), seed)
    for i, x in enumerate(encode_input(operands[0], width, Orientation.LEFT_TO_RIGHT)):
        b.tile(str(x), "horizontal-frame", north=pair(x, 0), east=chain(i), west=chain(i + 1))
    b.tile("+", "corner", east=chain(width), north=left(0))

    for y, (kind, label) in enumerate(program, start=1):
        b.tile(
            label, "vertical-frame", south=vertical(y), north=vertical(y + 1), west=row_glue[kind]
        )
    for y, (kind, _) in enumerate(program, start=1):
        north = left(y) if y < height else NULL
        b.tile("|", "left-frame", south=left(y - 1), east=row_glue[kind], north=north)

    bit_tiles: dict[int, int] = {}
    for x in (0, 1):
        for y in (0, 1):
            for c in (0, 1):
                s, cout = full_adder(x, y, c)
                tile_id = b.tile(
                    f"{s}+{x}{y}{c}",
                    "computational",
                    north=pair(x, s),
                    east=carry(c),
                    south=pair(x, y),
                    west=carry(cout),
                    color=BIT_COLORS[s],
                )
                bit_tiles[tile_id] = s
    for x in (0, 1):
        for y in (0, 1):
            for h in (0, 1):
                b.tile(
                    f"{y}<{x}{h}",
                    "computational",
                    north=pair(h, y),
                    east=shifted(h),
                    south=pair(x, y),
                    west=shifted(x),
                )
    for x in (0, 1):
        for y in (0, 1):
            b.tile(
                f"{y}^{x}",
                "computational",
                north=pair(y, 0),
                east=row_glue["copy"],
                south=pair(x, y),
                west=row_glue["copy"],
            )

    b.cap_row(width, vertical(height + 1))

    layout = ResultLayout(
        kind=ExpressionKind.MUL,
        result_columns=tuple(width - 1 - i for i in range(width)),
        result_y=height,
        bit_tiles=bit_tiles,
    )
    rows = ("input", *(kind for kind, _ in program), "cap")
    return Compiled(expression, b.build(), layout, (width + 2) * (height + 2), rows)
