"""n-input addition tile sets: ripple-carry rows (8- and 6-tile) and the L-type set.

Layout shared by both constructions: interior columns ``x = 0 .. w-1`` with
bit ``i`` at ``x = w-1-i`` (least significant bit east), the right frame at
``x = w``, the left frame at ``x = -1``, and the seed corner at ``(w, 0)``.
"""

from __future__ import annotations

from tilearith.bits import Orientation, bit, bit_length, encode_input, full_adder
from tilearith.builder import BIT_COLORS, SystemBuilder
from tilearith.errors import ArityError, CompileError, DomainError
from tilearith.model import NULL
from tilearith.specs import (
    AdditionSpec,
    AdditionVariant,
    Compiled,
    ExpressionKind,
    ExpressionSpec,
    ResultLayout,
    tileset_name,
)


def _check(spec: AdditionSpec) -> None:
    if spec.n < 2:
        raise ArityError(f"addition needs at least 2 operands, got {spec.n}")
    if any(a < 0 for a in spec.inputs):
        raise DomainError("addition operands must be non-negative")


def compile_add8(spec: AdditionSpec) -> Compiled:
    """Full-adder rows, one per operand after the first.

    Row 0 pairs the bits of a2 and a1; each odd row adds a pair column by
    column with the carry running west; each even row above pairs the running
    sum with the next operand. The last adder row is made of top-frame tiles
    with a null north edge and shows the sum in red and white.
    """
    _check(spec)
    if spec.variant is AdditionVariant.L_TYPE:
        raise CompileError("the L-type variant is built by compile_addL")
    six = spec.variant is AdditionVariant.SIX_TILE
    expression = ExpressionSpec(ExpressionKind.ADD, spec)
    n, w = spec.n, spec.width
    inputs = spec.inputs
    top_y = 2 * n - 3

    b = SystemBuilder(tileset_name(expression), "add6" if six else "add8")

    def pair(a: int, acc: int) -> str:
        if six and a != acc:
            return b.glue("p01")
        return b.glue(f"p{a}{acc}")

    def sum_bit(s: int) -> str:
        return b.glue(f"b{s}")

    def carry(c: int) -> str:
        return b.glue(f"c{c}")

    def top_carry(c: int) -> str:
        return b.glue(f"t{c}")

    def chain(y: int, i: int) -> str:
        return b.glue(f"${y}.{i}", 2 if y == 0 else 1)

    def right(y: int) -> str:
        return b.glue(f"R{y}", 2)

    def left(y: int) -> str:
        return b.glue(f"L{y}")

    seed = b.tile("+", "corner", west=chain(0, 0), north=right(1))
    b.seed((w, 0), seed)

    first, second = (encode_input(a, w, Orientation.LEFT_TO_RIGHT) for a in inputs[:2])
    for i in range(w):
        a2, a1 = second[i], first[i]
        b.tile(f"{a2}{a1}", "input", north=pair(a2, a1), east=chain(0, i), west=chain(0, i + 1))
    b.tile("+", "corner", east=chain(0, w), north=left(0))

    for y in range(1, top_y + 1):
        if y == top_y:
            west = top_carry(0)
        elif y % 2:
            west = carry(0)
        else:
            west = chain(y, 0)
        b.tile("|", "right-frame", south=right(y), north=right(y + 1), west=west)

    for y in range(1, top_y + 1):
        if y == top_y:
            east, north = top_carry(0), b.glue("Ltop", 2)
        elif y % 2:
            east, north = carry(0), left(y)
        else:
            east, north = chain(y, w), left(y)
        b.tile("|", "left-frame", south=left(y - 1), east=east, north=north)

    # intermediate rows pair the next operand with the running sum
    for j in range(2, n):
        y = 2 * (j - 1)
        operand = encode_input(inputs[j], w, Orientation.LEFT_TO_RIGHT)
        for i in range(w):
            alpha = operand[i]
            for s in (0, 1):
                b.tile(
                    f"{alpha}{s}",
                    "input",
                    north=pair(alpha, s),
                    east=chain(y, i),
                    south=sum_bit(s),
                    west=chain(y, i + 1),
                )

    pairs = [(0, 0), (0, 1), (1, 1)] if six else [(0, 0), (0, 1), (1, 0), (1, 1)]
    if n > 2:
        for a, acc in pairs:
            for c in (0, 1):
                s, cout = full_adder(a, acc, c)
                b.tile(
                    f"{s}+{a}{acc}{c}",
                    "computational",
                    north=sum_bit(s),
                    east=carry(c),
                    south=pair(a, acc),
                    west=carry(cout),
                )

    bit_tiles: dict[int, int] = {}
    for a, acc in pairs:
        for c in (0, 1):
            s, cout = full_adder(a, acc, c)
            tile_id = b.tile(
                str(s),
                "top-frame",
                east=top_carry(c),
                south=pair(a, acc),
                west=top_carry(cout),
                color=BIT_COLORS[s],
            )
            bit_tiles[tile_id] = s

    b.tile("+", "corner", south=b.glue("Ltop", 2))
    b.tile("+", "corner", south=right(top_y + 1))

    layout = ResultLayout(
        kind=ExpressionKind.ADD,
        result_columns=tuple(w - 1 - i for i in range(w)),
        result_y=top_y,
        bit_tiles=bit_tiles,
    )
    rows = ("input", *(["add", "input"] * (n - 2)), "result", "cap")
    return Compiled(expression, b.build(), layout, (w + 2) * (top_y + 2), rows)


def compile_addL(spec: AdditionSpec) -> Compiled:
    """One row per bit of a2 .. an above a1, each adding a single power of two.

    A right-frame tile for a set bit at position ``p`` emits ``#p``; pass tiles
    count it down while moving west so the 1 enters the sum at column ``p``,
    where half adders ripple it as a carry. Unset bits emit carry 0 and the
    row copies the sum unchanged.
    """
    _check(spec)
    expression = ExpressionSpec(ExpressionKind.ADD, spec)
    inputs = spec.inputs
    w = spec.width
    rows = [
        (k, p, bit(inputs[k], p)) for k in range(1, spec.n) for p in range(bit_length(inputs[k]))
    ]
    height = len(rows)

    b = SystemBuilder(tileset_name(expression), "addL")

    def chain(i: int) -> str:
        return b.glue(f"${i}", 2)

    def sum_bit(s: int) -> str:
        return b.glue(f"b{s}")

    def carry(c: int) -> str:
        return b.glue(f"c{c}")

    def pending(d: int) -> str:
        return carry(1) if d == 0 else b.glue(f"#{d}")

    def right(y: int) -> str:
        return b.glue(f"R{y}", 2)

    def left(y: int) -> str:
        return b.glue(f"L{y}")

    seed = b.tile("+", "corner", west=chain(0), north=right(1))
    b.seed((w, 0), seed)
    bottom = encode_input(inputs[0], w, Orientation.LEFT_TO_RIGHT)
    for i in range(w):
        v = bottom[i]
        b.tile(str(v), "input", north=sum_bit(v), east=chain(i), west=chain(i + 1))
    b.tile("|", "left-frame", east=chain(w), north=left(0))

    for y, (k, p, beta) in enumerate(rows, start=1):
        west = pending(p) if beta else carry(0)
        label = f"{beta}@a{k + 1}.{p}"
        b.tile(label, "right-frame", south=right(y), north=right(y + 1), west=west)
    for y in range(1, height + 1):
        north = left(y) if y < height else NULL
        b.tile("|", "left-frame", south=left(y - 1), east=carry(0), north=north)

    bit_tiles: dict[int, int] = {}
    for s in (0, 1):
        for c in (0, 1):
            tile_id = b.tile(
                f"{s ^ c}+{s}{c}",
                "computational",
                north=sum_bit(s ^ c),
                east=carry(c),
                south=sum_bit(s),
                west=carry(s & c),
            )
            bit_tiles[tile_id] = s ^ c
    longest = max((p for _, p, beta in rows if beta), default=0)
    for d in range(1, longest + 1):
        for s in (0, 1):
            tile_id = b.tile(
                f"{s}#{d}",
                "computational",
                north=sum_bit(s),
                east=pending(d),
                south=sum_bit(s),
                west=pending(d - 1),
            )
            bit_tiles[tile_id] = s

    b.cap_row(w, right(height + 1), corner_family="top-frame")

    layout = ResultLayout(
        kind=ExpressionKind.ADD,
        result_columns=tuple(w - 1 - i for i in range(w)),
        result_y=height,
        bit_tiles=bit_tiles,
    )
    row_kinds = ("input", *(f"a{k + 1}.{p}" for k, p, _ in rows), "cap")
    return Compiled(expression, b.build(), layout, (w + 2) * (height + 2), row_kinds)


def compile_addition(spec: AdditionSpec) -> Compiled:
    if spec.variant is AdditionVariant.L_TYPE:
        return compile_addL(spec)
    return compile_add8(spec)
