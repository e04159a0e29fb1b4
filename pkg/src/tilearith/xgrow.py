"""Reading and writing xgrow ``.tiles`` files.

Glues become dense integer indices in first-use order (seed tiles, then tile
types by id, each as north, east, south, west); index 0 is the null glue.
Seed placements and the temperature are not part of the xgrow grammar and
travel as ``% seed x y tile`` and ``% temperature t`` comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from tilearith.errors import TilesFormatError
from tilearith.model import NULL, Glue, Pos, TileSystem, TileType
from tilearith.specs import ExpressionSpec, tileset_name

HEADER = "tile edges matches {{N E S W}*}"

_TILE_ROW = re.compile(
    r"^\{\s*(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s*\}"
    r"(?:\[[^\]]*\])?"
    r"(?:\(([^)]*)\))?"
    r"\s*(?:%\s*(.*))?$"
)
_NUMBER_LINE = re.compile(r"^num (tile|binding) types\s*=\s*(\d+)$")


@dataclass(frozen=True, slots=True)
class TileRow:
    north: int
    east: int
    south: int
    west: int
    color: str = ""
    label: str = ""
    family: str = ""


@dataclass(frozen=True, slots=True)
class XgrowDocument:
    name: str
    tile_rows: tuple[TileRow, ...]
    binding_strengths: tuple[int, ...]
    seed: tuple[tuple[Pos, int], ...] = ()
    temperature: int = 2
    extra: tuple[str, ...] = field(default=())

    @property
    def num_tile_types(self) -> int:
        return len(self.tile_rows)

    @property
    def num_binding_types(self) -> int:
        return len(self.binding_strengths)

    @property
    def text(self) -> str:
        return format_document(self)


def tiles_filename(spec: ExpressionSpec) -> str:
    """File name for an emitted tileset, e.g. ``add_8_tile_12,6.tiles``."""
    return f"{tileset_name(spec)}.tiles"


def glue_order(system: TileSystem) -> list[str]:
    """Non-null glue names in canonical index order, used glues first."""
    order: dict[str, None] = {}
    tiles = [system.tiles[tile_id] for _, tile_id in system.seed]
    for tile in (*tiles, *system.tiles):
        for name in tile.glue_names():
            if name != NULL:
                order.setdefault(name, None)
    for name in sorted(system.glues):
        order.setdefault(name, None)
    return list(order)


def emit_tiles(system: TileSystem) -> XgrowDocument:
    index = {name: i for i, name in enumerate(glue_order(system), start=1)}
    rows = tuple(
        TileRow(
            *(index.get(name, 0) for name in tile.glue_names()),
            color=tile.color,
            label=tile.label,
            family=tile.family,
        )
        for tile in system.tiles
    )
    strengths = tuple(system.strength(name) for name in index)
    return XgrowDocument(system.name, rows, strengths, system.seed, system.temperature)


def format_document(doc: XgrowDocument) -> str:
    lines = [f"% tileset {doc.name}", f"% temperature {doc.temperature}"]
    lines.extend(f"% seed {x} {y} {tile_id}" for (x, y), tile_id in doc.seed)
    lines.extend(doc.extra)
    lines.append(HEADER)
    lines.append(f"num tile types={doc.num_tile_types}")
    lines.append(f"num binding types={doc.num_binding_types}")
    lines.append("tile edges={")
    for row in doc.tile_rows:
        text = f"{{{row.north} {row.east} {row.south} {row.west}}}"
        if row.color:
            text += f"({row.color})"
        comment = " ".join(part for part in (row.label, row.family) if part)
        if comment:
            text += f"  % {comment}"
        lines.append(text)
    lines.append("}")
    lines.append(f"binding strengths={{{' '.join(map(str, doc.binding_strengths))}}}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------


class _Reader:
    """Line-oriented reader for the stanza layout written by :func:`format_document`."""

    def __init__(self, text: str) -> None:
        self._lines = text.splitlines()
        self._pos = 0
        self.name = ""
        self.temperature = 2
        self.seed: list[tuple[Pos, int]] = []
        self.extra: list[str] = []
        self.declared: dict[str, tuple[int, int]] = {}
        self.rows: list[TileRow] | None = None
        self.strengths: list[int] | None = None

    def _error(self, message: str, stanza: str = "") -> TilesFormatError:
        return TilesFormatError(message, self._pos + 1, stanza)

    def read(self) -> XgrowDocument:
        while self._pos < len(self._lines):
            line = self._lines[self._pos].strip()
            if not line:
                pass
            elif line.startswith("%"):
                self._comment(line)
            elif line == HEADER:
                pass
            elif match := _NUMBER_LINE.match(line):
                self.declared[match.group(1)] = (int(match.group(2)), self._pos + 1)
            elif line.startswith("tile edges"):
                self._tile_edges(line)
            elif line.startswith("binding strengths"):
                self._strengths(line)
            else:
                self.extra.append(f"% {line}")
            self._pos += 1

        if self.rows is None:
            raise self._error("missing stanza", "tile edges")
        if self.strengths is None:
            raise self._error("missing stanza", "binding strengths")
        self._check_counts()
        return XgrowDocument(
            self.name,
            tuple(self.rows),
            tuple(self.strengths),
            tuple(self.seed),
            self.temperature,
            tuple(self.extra),
        )

    def _comment(self, line: str) -> None:
        parts = line[1:].split()
        try:
            match parts:
                case ["tileset", name]:
                    self.name = name
                case ["temperature", value]:
                    self.temperature = int(value)
                case ["seed", x, y, tile_id]:
                    self.seed.append(((int(x), int(y)), int(tile_id)))
                case _:
                    self.extra.append(line)
        except ValueError as exc:
            raise self._error(f"malformed directive {line!r}") from exc

    def _tile_edges(self, line: str) -> None:
        if not re.fullmatch(r"tile edges\s*=\s*\{", line):
            raise self._error("expected 'tile edges={'", "tile edges")
        rows: list[TileRow] = []
        self._pos += 1
        while self._pos < len(self._lines):
            text = self._lines[self._pos].strip()
            if text == "}":
                self.rows = rows
                return
            if text and not text.startswith("%"):
                match = _TILE_ROW.match(text)
                if match is None:
                    raise self._error(f"malformed tile row {text!r}", "tile edges")
                north, east, south, west, color, comment = match.groups()
                label, _, family = (comment or "").strip().partition(" ")
                rows.append(
                    TileRow(
                        int(north),
                        int(east),
                        int(south),
                        int(west),
                        color or "",
                        label,
                        family.strip(),
                    )
                )
            self._pos += 1
        raise self._error("unterminated stanza", "tile edges")

    def _strengths(self, line: str) -> None:
        _, _, rest = line.partition("=")
        body = rest.strip()
        if not body.startswith("{"):
            raise self._error("expected 'binding strengths={'", "binding strengths")
        body = body[1:]
        while "}" not in body:
            self._pos += 1
            if self._pos >= len(self._lines):
                raise self._error("unterminated stanza", "binding strengths")
            body += " " + self._lines[self._pos].strip()
        inner, _, trailing = body.partition("}")
        if trailing.strip():
            raise self._error("unexpected text after '}'", "binding strengths")
        try:
            self.strengths = [int(v) for v in inner.split()]
        except ValueError as exc:
            raise self._error("non-integer strength", "binding strengths") from exc

    def _check_counts(self) -> None:
        assert self.rows is not None and self.strengths is not None
        for kind, actual, stanza in (
            ("tile", len(self.rows), "tile edges"),
            ("binding", len(self.strengths), "binding strengths"),
        ):
            if kind in self.declared and self.declared[kind][0] != actual:
                declared, line = self.declared[kind]
                raise TilesFormatError(
                    f"num {kind} types={declared} but {actual} entries", line, stanza
                )
        top = len(self.strengths)
        for number, row in enumerate(self.rows):
            if max(row.north, row.east, row.south, row.west) > top:
                raise TilesFormatError(f"tile {number} uses glue beyond {top}", 0, "tile edges")


def read_document(text: str) -> XgrowDocument:
    return _Reader(text).read()


def document_to_system(doc: XgrowDocument) -> TileSystem:
    """Tile system with glue names ``g<index>`` synthesized from the document."""
    glues = {f"g{i}": Glue(f"g{i}", s) for i, s in enumerate(doc.binding_strengths, start=1)}

    def name(index: int) -> str:
        return f"g{index}" if index else NULL

    tiles = tuple(
        TileType(
            tile_id,
            row.label or f"t{tile_id}",
            name(row.north),
            name(row.east),
            name(row.south),
            name(row.west),
            row.color or "white",
            row.family,
        )
        for tile_id, row in enumerate(doc.tile_rows)
    )
    seed = doc.seed or (((0, 0), 0),)
    return TileSystem(doc.name or "tileset", glues, tiles, seed, doc.temperature)


def parse_tiles(text: str) -> TileSystem:
    return document_to_system(read_document(text))


def structure_key(system: TileSystem) -> tuple:
    """Canonical form that ignores glue names; equal for a system and its round trip."""
    doc = emit_tiles(system)
    used = {i for row in doc.tile_rows for i in (row.north, row.east, row.south, row.west)}
    strengths = tuple(s for i, s in enumerate(doc.binding_strengths, start=1) if i in used)
    unused = tuple(
        sorted(s for i, s in enumerate(doc.binding_strengths, start=1) if i not in used)
    )
    return (doc.temperature, doc.seed, doc.tile_rows, strengths, unused)
