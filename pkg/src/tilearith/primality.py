"""Primality by trial division, grown row by row.

Every interior tile above the converter row carries a triple ``(n, I, k)``
of bits in its column: the input ``n``, the running value ``I`` and the
candidate divisor ``k`` (which starts at ``n // 2``). Rows then follow the
loop::

    check k > 1 ──no──▶ prime
        │ yes
    move east to west
    compare I with k ──I == k──▶ not prime
        │ I > k: subtract I := I - k, compare again
        │ I < k: decrement k := k - 1 and reset I := n, check again

Rows that run west to east start at the left frame and end at a right-frame
tile that reads the final state; rows that run east to west start at the
right frame. The verdict is a right-frame tile capped by a top row.
"""

from __future__ import annotations

from tilearith.bits import Orientation, bit_length, encode_input, subtractor
from tilearith.builder import SystemBuilder
from tilearith.errors import DomainError
from tilearith.specs import (
    Compiled,
    ExpressionKind,
    ExpressionSpec,
    PrimalitySpec,
    ResultLayout,
    tileset_name,
)

VERDICT_COLORS = {True: "red", False: "white"}


def row_program(n: int) -> tuple[str, ...]:
    """Kinds of the rows grown for ``n``, bottom to top."""
    rows = ["input", "convert"]
    k = n // 2
    while True:
        rows.append("check-k")
        if k <= 1:
            rows.append("prime")
            return tuple(rows)
        rows.append("move")
        i = n
        while True:
            rows.append("compare")
            if i > k:
                rows.append("subtract")
                i -= k
            elif i == k:
                rows.append("not-prime")
                return tuple(rows)
            else:
                rows.append("decrement")
                k -= 1
                break


def compile_prime(spec: PrimalitySpec) -> Compiled:
    n = spec.n
    if n < 2:
        raise DomainError(f"primality needs n >= 2, got {n}")
    expression = ExpressionSpec(ExpressionKind.PRIME, spec)
    width = bit_length(n)
    b = SystemBuilder(tileset_name(expression), "prime")

    def g(label: str, strength: int = 1) -> str:
        return b.glue(label, strength)

    def triple(v: int, i: int, k: int) -> str:
        return g(f"{v}{i}{k}")

    def chain(i: int) -> str:
        return g(f"${i}", 2)

    # input row, grown west from the seed
    seed = b.tile("+", "corner", west=chain(0), north=g("R0", 2))
    b.seed((width, 0), seed)
    for i, v in enumerate(encode_input(n, width, Orientation.LEFT_TO_RIGHT)):
        b.tile(str(v), "input", north=g(f"n{v}"), east=chain(i), west=chain(i + 1))
    b.tile("+", "corner", east=chain(width), north=g("L0", 2))

    # converter: n_i becomes (n_i, n_i, n_(i+1)), i.e. k = n >> 1
    b.tile("|", "left-frame", south=g("L0", 2), east=g("v0"), north=g("Lk", 2))
    for v in (0, 1):
        for upper in (0, 1):
            b.tile(
                f"{v}{v}{upper}",
                "converter",
                north=triple(v, v, upper),
                east=g(f"v{v}"),
                south=g(f"n{v}"),
                west=g(f"v{upper}"),
            )
    b.tile("|", "right-frame", south=g("R0", 2), north=g("Rk"))

    # check k > 1 (west to east): =0 no set bit yet, =1 the last column seen
    # was the first set bit, =2 a set bit followed by more columns
    b.tile("|", "left-frame", south=g("Lk", 2), east=g("=0"), north=g("Lm"))
    for v in (0, 1):
        for k in (0, 1):
            for state in (0, 1, 2):
                if state == 0:
                    new = k
                else:
                    new = 2
                b.tile(
                    f"{v}{v}{k}",
                    "check-k-gt-1",
                    north=triple(v, v, k),
                    east=g(f"={new}"),
                    south=triple(v, v, k),
                    west=g(f"={state}"),
                )
    b.tile(">", "right-frame", south=g("Rk"), west=g("=2"), north=g("Rm", 2))
    prime_tile = b.tile(
        "P", "right-frame", south=g("Rk"), west=g("=1"), north=g("Rp", 2), color="red"
    )

    # move the k row into place (east to west)
    b.tile("<", "right-frame", south=g("Rm", 2), west=g("mv"), north=g("Rc"))
    for v in (0, 1):
        for k in (0, 1):
            b.tile(
                f"{v}{v}{k}",
                "move",
                north=triple(v, v, k),
                east=g("mv"),
                south=triple(v, v, k),
                west=g("mv"),
            )
    b.tile("|", "left-frame", south=g("Lm"), east=g("mv"), north=g("Lc", 2))

    # compare I with k (west to east, most significant column first)
    b.tile("|", "left-frame", south=g("Lc", 2), east=g("c="), north=g("Ls"))
    for v in (0, 1):
        for i in (0, 1):
            for k in (0, 1):
                for state in ("=", "<", ">"):
                    if state == "=" and i != k:
                        new = ">" if i > k else "<"
                    else:
                        new = state
                    b.tile(
                        f"{v}{i}{k}",
                        "check-c-gt-b",
                        north=triple(v, i, k),
                        east=g(f"c{new}"),
                        south=triple(v, i, k),
                        west=g(f"c{state}"),
                    )
    b.tile("-", "right-frame", south=g("Rc"), west=g("c>"), north=g("Rs", 2))
    b.tile("v", "right-frame", south=g("Rc"), west=g("c<"), north=g("Rd", 2))
    composite_tile = b.tile(
        "N", "right-frame", south=g("Rc"), west=g("c="), north=g("Rn", 2), color="white"
    )

    # subtract I := I - k (east to west)
    b.tile("|", "right-frame", south=g("Rs", 2), west=g("0-"), north=g("Rc"))
    for v in (0, 1):
        for i in (0, 1):
            for k in (0, 1):
                for c in (0, 1):
                    d, borrow = subtractor(k, i, c)
                    b.tile(
                        f"{v}{d}{k}",
                        "subtract-b-c",
                        north=triple(v, d, k),
                        east=g(f"{c}-"),
                        south=triple(v, i, k),
                        west=g(f"{borrow}-"),
                    )
    b.tile("|", "left-frame", south=g("Ls"), east=g("0-"), north=g("Lc", 2))

    # decrement k := k - 1 and reset I := n (east to west)
    b.tile("|", "right-frame", south=g("Rd", 2), west=g("d1"), north=g("Rk"))
    for v in (0, 1):
        for i in (0, 1):
            for k in (0, 1):
                for c in (0, 1):
                    d, borrow = subtractor(c, k, 0)
                    b.tile(
                        f"{v}{v}{d}",
                        "subtract-c-1",
                        north=triple(v, v, d),
                        east=g(f"d{c}"),
                        south=triple(v, i, k),
                        west=g(f"d{borrow}"),
                    )
    b.tile("|", "left-frame", south=g("Ls"), east=g("d0"), north=g("Lk", 2))

    # verdict caps: the top-right corner sits on the verdict tile and the row
    # grows west over the last row's triples
    for verdict, label, below, left_below, states in (
        (True, "P", "Rp", "Lm", [(v, v, k) for v in (0, 1) for k in (0, 1)]),
        (False, "N", "Rn", "Ls", [(v, i, k) for v in (0, 1) for i in (0, 1) for k in (0, 1)]),
    ):
        color = VERDICT_COLORS[verdict]
        b.tile(label, "corner", south=g(below, 2), west=g(label), color=color)
        for v, i, k in states:
            b.tile(
                label,
                "top-frame",
                east=g(label),
                south=triple(v, i, k),
                west=g(label),
                color=color,
            )
        b.tile(label, "corner", south=g(left_below), east=g(label), color=color)

    rows = row_program(n)
    layout = ResultLayout(
        kind=ExpressionKind.PRIME,
        verdict_tiles={prime_tile: True, composite_tile: False},
    )
    return Compiled(expression, b.build(), layout, (width + 2) * len(rows), rows)
