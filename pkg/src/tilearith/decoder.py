"""Reading answers off terminal assemblies."""

from __future__ import annotations

from dataclasses import dataclass

from tilearith.bits import decode_bits
from tilearith.errors import DecodeError
from tilearith.model import Assembly, Pos
from tilearith.specs import ExpressionKind, ResultLayout


@dataclass(frozen=True, slots=True)
class DecodedResult:
    kind: ExpressionKind
    value: int | None = None
    remainder: int | None = None
    prime: bool | None = None
    sign: int | None = None
    read_region: tuple[Pos, ...] = ()


def decode(kind: ExpressionKind, terminal: Assembly, layout: ResultLayout) -> DecodedResult:
    match kind:
        case ExpressionKind.ADD | ExpressionKind.MUL:
            bits, region = _read_row(terminal, layout)
            return DecodedResult(kind, value=decode_bits(bits), read_region=region)
        case ExpressionKind.SIGNED:
            bits, region = _read_row(terminal, layout)
            sign, sign_pos = _read_sign(terminal, layout)
            return DecodedResult(
                kind,
                value=sign * decode_bits(bits),
                sign=sign,
                read_region=(*region, sign_pos),
            )
        case ExpressionKind.SIGNED_MOD:
            bits, region = _read_row(terminal, layout)
            sign, sign_pos = _read_sign(terminal, layout)
            return DecodedResult(
                kind,
                remainder=decode_bits(bits),
                sign=sign,
                read_region=(*region, sign_pos),
            )
        case ExpressionKind.PRIME:
            found = [
                (pos, layout.verdict_tiles[tile_id])
                for pos, tile_id in terminal.items()
                if tile_id in layout.verdict_tiles
            ]
            if len(found) != 1:
                raise DecodeError(f"expected one verdict tile, found {len(found)}")
            pos, verdict = found[0]
            return DecodedResult(kind, prime=verdict, read_region=(pos,))
    raise DecodeError(f"cannot decode {kind.value} results")


def _read_row(terminal: Assembly, layout: ResultLayout) -> tuple[list[int], tuple[Pos, ...]]:
    """Bits of the result row, least significant first."""
    if layout.result_y is not None:
        y = layout.result_y
    else:
        y = _locate_row(terminal, layout)
    bits: list[int] = []
    region: list[Pos] = []
    missing: list[Pos] = []
    for x in layout.result_columns:
        tile_id = terminal.get((x, y))
        if tile_id is None or tile_id not in layout.bit_tiles:
            missing.append((x, y))
            continue
        bits.append(layout.bit_tiles[tile_id])
        region.append((x, y))
    if missing:
        listed = ", ".join(f"{x},{y}" for x, y in missing)
        raise DecodeError(f"result row incomplete: no result tile at {listed}", tuple(missing))
    return bits, tuple(region)


def _locate_row(terminal: Assembly, layout: ResultLayout) -> int:
    """The single row holding result tiles, for layouts whose height depends on the input."""
    rows = {y for (_, y), tile_id in terminal.items() if tile_id in layout.bit_tiles}
    if len(rows) != 1:
        raise DecodeError(f"expected the result on one row, found {len(rows)} rows")
    return rows.pop()


def _read_sign(terminal: Assembly, layout: ResultLayout) -> tuple[int, Pos]:
    found = [
        (layout.sign_tiles[tile_id], pos)
        for pos, tile_id in terminal.items()
        if tile_id in layout.sign_tiles
    ]
    if len(found) != 1:
        raise DecodeError(f"expected one sign marker, found {len(found)}")
    return found[0]


def format_result(result: DecodedResult) -> list[str]:
    """Key-value report lines (``result=``, ``remainder=``, ``sign=``, ``prime=``)."""
    lines: list[str] = []
    if result.value is not None:
        lines.append(f"result={result.value}")
    if result.remainder is not None:
        lines.append(f"remainder={result.remainder}")
    if result.sign is not None:
        lines.append(f"sign={'-' if result.sign < 0 else '+'}")
    if result.prime is not None:
        lines.append(f"prime={'yes' if result.prime else 'no'}")
    return lines
