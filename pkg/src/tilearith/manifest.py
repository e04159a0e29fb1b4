"""Tile manifest: a line-based, name-preserving text form of a tile system.

::

    tileset add_8_tile_12,6 temperature=2
    glue add8:$0.0 2
    tile 0 S N=add8:R1 E=- S=- W=add8:$0.0 color=black family=seed
    seed 5 0 0

The null glue is written ``-``. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from tilearith.errors import TilesFormatError
from tilearith.model import NULL, Glue, Pos, TileSystem, TileType

_SIDE_KEYS = ("N", "E", "S", "W")


def _glue_text(name: str) -> str:
    return name if name != NULL else "-"


def dump_manifest(system: TileSystem) -> str:
    lines = [f"tileset {system.name} temperature={system.temperature}"]
    lines.extend(f"glue {glue.name} {glue.strength}" for glue in system.glues.values())
    for tile in system.tiles:
        pairs = zip(_SIDE_KEYS, tile.glue_names(), strict=True)
        sides = " ".join(f"{key}={_glue_text(glue)}" for key, glue in pairs)
        family = f" family={tile.family}" if tile.family else ""
        lines.append(f"tile {tile.id} {tile.label} {sides} color={tile.color}{family}")
    lines.extend(f"seed {x} {y} {tile_id}" for (x, y), tile_id in system.seed)
    return "\n".join(lines) + "\n"


def _int(text: str, line: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        message = f"{what} must be an integer, got {text!r}"
        raise TilesFormatError(message, line, "manifest") from None


def _tile(parts: list[str], line: int) -> TileType:
    if len(parts) < 7:
        raise TilesFormatError("expected 'tile <id> <label> N= E= S= W= color='", line, "manifest")
    tile_id = _int(parts[1], line, "tile id")
    fields: dict[str, str] = {}
    for token in parts[3:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise TilesFormatError(f"expected key=value, got {token!r}", line, "manifest")
        fields[key] = value
    missing = [key for key in (*_SIDE_KEYS, "color") if key not in fields]
    if missing:
        raise TilesFormatError(f"tile {tile_id} is missing {', '.join(missing)}", line, "manifest")
    north, east, south, west = (
        NULL if fields[key] == "-" else fields[key] for key in _SIDE_KEYS
    )
    return TileType(
        tile_id, parts[2], north, east, south, west, fields["color"], fields.get("family", "")
    )


def load_manifest(text: str) -> TileSystem:
    name = ""
    temperature = 2
    glues: dict[str, Glue] = {}
    tiles: list[TileType] = []
    seed: list[tuple[Pos, int]] = []
    seen_header = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        match parts:
            case ["tileset", tileset_name, *rest]:
                if seen_header:
                    raise TilesFormatError("duplicate tileset line", line_no, "manifest")
                seen_header = True
                name = tileset_name
                for token in rest:
                    key, _, value = token.partition("=")
                    if key != "temperature":
                        raise TilesFormatError(f"unknown option {key!r}", line_no, "manifest")
                    temperature = _int(value, line_no, "temperature")
            case ["glue", glue_name, strength]:
                if glue_name in glues:
                    raise TilesFormatError(f"glue {glue_name} declared twice", line_no, "manifest")
                glues[glue_name] = Glue(glue_name, _int(strength, line_no, "strength"))
            case ["tile", *_]:
                tiles.append(_tile(parts, line_no))
            case ["seed", x, y, tile_id]:
                seed.append(
                    (
                        (_int(x, line_no, "x"), _int(y, line_no, "y")),
                        _int(tile_id, line_no, "tile id"),
                    )
                )
            case _:
                raise TilesFormatError(f"unrecognised line {line!r}", line_no, "manifest")

    if not seen_header:
        raise TilesFormatError("missing tileset line", 1, "manifest")
    tiles.sort(key=lambda tile: tile.id)
    return TileSystem(name, glues, tuple(tiles), tuple(seed), temperature)
