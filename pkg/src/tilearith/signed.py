"""Signed sums in two's complement, with an optional reduction modulo ``t``.

The lower rows follow the n-input adder: row 0 pairs the first two operands,
odd rows add or subtract a pair column by column, even rows pair the running
value with the next magnitude. The operation tag travels with the carry
(``+c`` or ``-c``). Three rows then turn the two's-complement value into
sign and magnitude:

* msb (east to west): carries the most significant bit to the left frame;
* broadcast (west to east): spreads the sign across the row;
* negate or pass (east to west): complements and increments when negative.

The left-frame tile of the last of these rows is the sign marker.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from tilearith.bits import Orientation, bit_length, encode_input, full_adder, subtractor
from tilearith.builder import BIT_COLORS, SystemBuilder
from tilearith.errors import ArityError, DomainError, InputOverflowError, ModulusError
from tilearith.model import NULL
from tilearith.specs import (
    Compiled,
    ExpressionKind,
    ExpressionSpec,
    ResultLayout,
    SignedExpressionSpec,
    tileset_name,
)

SIGN_COLORS = {1: "green", -1: "purple"}


def signed_width(terms: tuple[tuple[int, int], ...], modulus: int | None = None) -> int:
    """Row width for normalized ``terms``: every prefix sum fits with a sign bit."""
    n = len(terms)
    m = max(bit_length(a) for _, a in terms)
    width = max(n + m - 1, bit_length(sum(a for _, a in terms)) + 1)
    if modulus is not None:
        width = max(width, bit_length(modulus))
    return width


def _check(spec: SignedExpressionSpec) -> tuple[tuple[int, int], ...]:
    if not spec.terms:
        raise ArityError("a signed expression needs at least one term")
    for sign, magnitude in spec.terms:
        if sign not in (1, -1):
            raise DomainError(f"term sign must be +1 or -1, got {sign}")
        if magnitude < 0:
            raise DomainError("term magnitudes must be non-negative")
    if spec.modulus is not None and spec.modulus < 2:
        raise ModulusError(f"modulus must be at least 2, got {spec.modulus}")
    return spec.normalized()


@dataclass(slots=True)
class _SignedRows:
    """Glue vocabulary and row emitter shared by the plain and modular builds."""

    b: SystemBuilder
    terms: tuple[tuple[int, int], ...]
    width: int
    bit_tiles: dict[int, int] = field(default_factory=dict)
    sign_tiles: dict[int, int] = field(default_factory=dict)

    def g(self, label: str, strength: int = 1) -> str:
        return self.b.glue(label, strength)

    def pair(self, a: int, acc: int) -> str:
        return self.g(f"p{a}{acc}")

    def chain(self, y: int, i: int) -> str:
        return self.g(f"${y}.{i}", 2 if y == 0 else 1)

    def right(self, y: int) -> str:
        return self.g(f"R{y}", 2)

    def left(self, y: int) -> str:
        return self.g(f"L{y}")

    @property
    def sign_row(self) -> int:
        """Row of the negate-or-pass tiles and the sign marker."""
        return 2 * len(self.terms)

    def emit(self, sign_north: str) -> None:
        """Emit every row up to and including the negate-or-pass row.

        ``sign_north`` is the north glue of both sign markers.
        """
        b, w, terms = self.b, self.width, self.terms
        n = len(terms)
        last = 2 * n - 3
        msb_row = last + 1

        seed = b.tile("+", "corner", west=self.chain(0, 0), north=self.right(1))
        b.seed((w, 0), seed)
        a1, a2 = (encode_input(a, w, Orientation.LEFT_TO_RIGHT) for _, a in terms[:2])
        for i in range(w):
            hi, lo = a2[i], a1[i]
            b.tile(
                f"{hi}{lo}",
                "input",
                north=self.pair(hi, lo),
                east=self.chain(0, i),
                west=self.chain(0, i + 1),
            )
        b.tile("+", "corner", east=self.chain(0, w), north=self.left(0))

        def op(k: int) -> str:
            return "+" if terms[k][0] > 0 else "-"

        # rows 1 .. last: add/subtract rows (odd) and pairing rows (even)
        for y in range(1, last + 1):
            if y % 2:
                k = (y + 1) // 2
                b.tile(
                    op(k),
                    "right-frame",
                    south=self.right(y),
                    north=self.right(y + 1),
                    west=self.g(f"{op(k)}0"),
                )
            else:
                b.tile(
                    "|",
                    "right-frame",
                    south=self.right(y),
                    north=self.right(y + 1),
                    west=self.chain(y, 0),
                )
        for y in range(1, last + 1):
            if y % 2:
                tag = op((y + 1) // 2)
                for c in (0, 1):
                    b.tile(
                        "|",
                        "left-frame",
                        south=self.left(y - 1),
                        east=self.g(f"{tag}{c}"),
                        north=self.left(y),
                    )
            else:
                b.tile(
                    "|",
                    "left-frame",
                    south=self.left(y - 1),
                    east=self.chain(y, w),
                    north=self.left(y),
                )

        for k in range(2, n):
            y = 2 * (k - 1)
            operand = encode_input(terms[k][1], w, Orientation.LEFT_TO_RIGHT)
            for i in range(w):
                alpha = operand[i]
                for s in (0, 1):
                    b.tile(
                        f"{alpha}{s}",
                        "input",
                        north=self.pair(alpha, s),
                        east=self.chain(y, i),
                        south=self.g(f"b{s}"),
                        west=self.chain(y, i + 1),
                    )

        for a in (0, 1):
            for acc in (0, 1):
                for c in (0, 1):
                    s, cout = full_adder(a, acc, c)
                    b.tile(
                        f"{s}+",
                        "computational+",
                        north=self.g(f"b{s}"),
                        east=self.g(f"+{c}"),
                        south=self.pair(a, acc),
                        west=self.g(f"+{cout}"),
                    )
        for a in (0, 1):
            for acc in (0, 1):
                for c in (0, 1):
                    d, borrow = subtractor(a, acc, c)
                    b.tile(
                        f"{d}-",
                        "computational-",
                        north=self.g(f"b{d}"),
                        east=self.g(f"-{c}"),
                        south=self.pair(a, acc),
                        west=self.g(f"-{borrow}"),
                    )

        self._emit_finalization(msb_row, sign_north)

    def _emit_finalization(self, msb_row: int, sign_north: str) -> None:
        b = self.b
        spread, sign_row = msb_row + 1, msb_row + 2

        # msb row: the carried bit ends as the most significant bit
        b.tile(
            "?",
            "right-frame",
            south=self.right(msb_row),
            north=self.right(spread),
            west=self.g("p0"),
        )
        for v in (0, 1):
            for e in (0, 1):
                b.tile(
                    str(v),
                    "other-computational",
                    north=self.g(f"v{v}"),
                    east=self.g(f"p{e}"),
                    south=self.g(f"b{v}"),
                    west=self.g(f"p{v}"),
                )
        for msb, flag in ((0, "p"), (1, "n")):
            b.tile(
                "?",
                "left-frame",
                south=self.left(msb_row - 1),
                east=self.g(f"p{msb}"),
                north=self.g(f"S{flag}", 2),
            )

        # broadcast row
        for flag in ("p", "n"):
            b.tile(
                "-" if flag == "n" else "+",
                "left-frame",
                south=self.g(f"S{flag}", 2),
                east=self.g(f"s{flag}"),
                north=self.g(f"M{flag}"),
            )
        for v in (0, 1):
            for flag in ("p", "n"):
                b.tile(
                    str(v),
                    "other-computational",
                    north=self.g(f"q{v}{flag}"),
                    east=self.g(f"s{flag}"),
                    south=self.g(f"v{v}"),
                    west=self.g(f"s{flag}"),
                )
        b.tile("|", "right-frame", south=self.right(spread), north=self.right(sign_row))

        # negate-or-pass row: a negative value is complemented and incremented
        b.tile(
            "|",
            "right-frame",
            south=self.right(sign_row),
            north=self.right(sign_row + 1),
            west=self.g("n1"),
        )
        for v in (0, 1):
            for flag in ("p", "n"):
                for c in (0, 1):
                    if flag == "n":
                        s, cout = (1 - v) ^ c, (1 - v) & c
                    else:
                        s, cout = v, c
                    tile_id = b.tile(
                        str(s),
                        "other-computational",
                        north=self.g(f"m{s}"),
                        east=self.g(f"n{c}"),
                        south=self.g(f"q{v}{flag}"),
                        west=self.g(f"n{cout}"),
                        color=BIT_COLORS[s],
                    )
                    self.bit_tiles[tile_id] = s
        for sign, flag, carry in ((-1, "n", 0), (1, "p", 1)):
            tile_id = b.tile(
                "-" if sign < 0 else "+",
                "left-frame",
                south=self.g(f"M{flag}"),
                east=self.g(f"n{carry}"),
                north=sign_north,
                color=SIGN_COLORS[sign],
            )
            self.sign_tiles[tile_id] = sign


def _check_prefixes(terms: tuple[tuple[int, int], ...], width: int) -> None:
    total = 0
    for sign, magnitude in terms:
        total += sign * magnitude
        if abs(total) >= 1 << (width - 1):
            raise InputOverflowError(
                f"partial sum {total} does not fit in {width} bits", total, width
            )


def compile_addsub(spec: SignedExpressionSpec) -> Compiled:
    terms = _check(spec)
    if spec.modulus is not None:
        return compile_modexpr(spec)
    expression = ExpressionSpec(ExpressionKind.SIGNED, spec)
    width = signed_width(terms)
    _check_prefixes(terms, width)

    rows = _SignedRows(SystemBuilder(tileset_name(expression), "pm"), terms, width)
    rows.emit(NULL)
    top = rows.sign_row + 1
    rows.b.cap_row(width, rows.right(top))

    layout = ResultLayout(
        kind=ExpressionKind.SIGNED,
        result_columns=tuple(width - 1 - i for i in range(width)),
        result_y=rows.sign_row,
        bit_tiles=rows.bit_tiles,
        sign_tiles=rows.sign_tiles,
    )
    kinds = _row_kinds(terms)
    return Compiled(expression, rows.b.build(), layout, (width + 2) * (top + 1), (*kinds, "cap"))


def _row_kinds(terms: tuple[tuple[int, int], ...]) -> tuple[str, ...]:
    kinds = ["input"]
    for k in range(1, len(terms)):
        if k > 1:
            kinds.append("input")
        kinds.append("add" if terms[k][0] > 0 else "subtract")
    return (*kinds, "msb", "broadcast", "negate")


def compile_modexpr(spec: SignedExpressionSpec) -> Compiled:
    """Signed rows followed by repeated subtraction of ``t`` from the magnitude.

    A load row pairs every magnitude bit ``r`` with the matching bit of ``t``.
    Each round compares (east to west, deciding at the most significant
    column), then, while ``r >= t``, broadcasts a go signal west to east and
    subtracts east to west. Once ``r < t`` the left frame starts a display row
    of red and white remainder tiles and growth ends.
    """
    terms = _check(spec)
    if spec.modulus is None:
        raise ModulusError("a modular expression needs a modulus")
    t = spec.modulus
    expression = ExpressionSpec(ExpressionKind.SIGNED_MOD, spec)
    width = signed_width(terms, t)
    _check_prefixes(terms, width)

    b = SystemBuilder(tileset_name(expression), "mod")
    rows = _SignedRows(b, terms, width)
    g = rows.g
    rows.emit(g("Lm"))
    load = rows.sign_row + 1

    def pair(r: int, tv: int) -> str:
        return g(f"r{r}{tv}")

    w = width
    b.tile("t", "right-frame", south=rows.right(load), north=g("Rk", 2), west=g("$L0"))
    modulus_bits = encode_input(t, w, Orientation.LEFT_TO_RIGHT)
    for i in range(w):
        tv = modulus_bits[i]
        for r in (0, 1):
            b.tile(
                f"{r}{tv}",
                "input",
                north=pair(r, tv),
                east=g(f"$L{i}"),
                south=g(f"m{r}"),
                west=g(f"$L{i + 1}"),
            )
    b.tile("|", "left-frame", south=g("Lm"), east=g(f"$L{w}"), north=g("Lk"))

    # compare row: the most significant differing column decides
    b.tile(">", "right-frame", south=g("Rk", 2), west=g("ge"), north=g("Rb"))
    for r in (0, 1):
        for tv in (0, 1):
            for state in ("ge", "lt"):
                if r != tv:
                    new = "ge" if r > tv else "lt"
                else:
                    new = state
                b.tile(
                    f"{r}{'>' if new == 'ge' else '<'}",
                    "comparator",
                    north=pair(r, tv),
                    east=g(state),
                    south=pair(r, tv),
                    west=g(new),
                )
    b.tile("|", "left-frame", south=g("Lk"), east=g("ge"), north=g("Go", 2))
    b.tile("|", "left-frame", south=g("Lk"), east=g("lt"), north=g("Halt", 2))

    # broadcast row
    b.tile("|", "left-frame", south=g("Go", 2), east=g("go"), north=g("Ls"))
    for r in (0, 1):
        for tv in (0, 1):
            b.tile(
                str(r),
                "comparator",
                north=pair(r, tv),
                east=g("go"),
                south=pair(r, tv),
                west=g("go"),
            )
    b.tile("|", "right-frame", south=g("Rb"), west=g("go"), north=g("Rs", 2))

    # subtract row: r - t
    b.tile("-", "right-frame", south=g("Rs", 2), west=g("d0"), north=g("Rk", 2))
    for r in (0, 1):
        for tv in (0, 1):
            for c in (0, 1):
                d, borrow = subtractor(tv, r, c)
                b.tile(
                    f"{d}-",
                    "computational-",
                    north=pair(d, tv),
                    east=g(f"d{c}"),
                    south=pair(r, tv),
                    west=g(f"d{borrow}"),
                )
    b.tile("|", "left-frame", south=g("Ls"), east=g("d0"), north=g("Lk"))

    # display row
    b.tile("+", "corner", south=g("Halt", 2), east=g("hz"))
    remainder_tiles: dict[int, int] = {}
    for r in (0, 1):
        for tv in (0, 1):
            tile_id = b.tile(
                str(r),
                "top-frame",
                east=g("hz"),
                south=pair(r, tv),
                west=g("hz"),
                color=BIT_COLORS[r],
            )
            remainder_tiles[tile_id] = r
    b.tile("+", "corner", south=g("Rb"), west=g("hz"))

    rounds = abs(spec.value) // t
    height = load + 1 + 3 * rounds + 2
    layout = ResultLayout(
        kind=ExpressionKind.SIGNED_MOD,
        result_columns=tuple(width - 1 - i for i in range(width)),
        result_y=None,
        bit_tiles=remainder_tiles,
        sign_tiles=rows.sign_tiles,
    )
    kinds = (
        *_row_kinds(terms),
        "load",
        *(["compare", "broadcast", "subtract"] * rounds),
        "compare",
        "display",
    )
    return Compiled(expression, b.build(), layout, (width + 2) * height, kinds)
