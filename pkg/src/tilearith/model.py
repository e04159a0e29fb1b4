"""Abstract tile assembly model: glues, tile types, tile systems and assemblies.

Coordinates grow east along +x and north along +y. A tile binds to a
neighbour on one side when both facing glue names are equal and non-null;
the bond contributes the glue's strength. A tile may attach at an empty
site when its total binding strength reaches the system temperature.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum

from tilearith.errors import OccupiedSiteError, UnknownTileError, ValidationError

Pos = tuple[int, int]

NULL = ""  # the null glue name; matches nothing


class Side(Enum):
    NORTH = (0, 1)
    EAST = (1, 0)
    SOUTH = (0, -1)
    WEST = (-1, 0)

    @property
    def opposite(self) -> Side:
        return _OPPOSITE[self]

    def step(self, pos: Pos) -> Pos:
        dx, dy = self.value
        return (pos[0] + dx, pos[1] + dy)


_OPPOSITE = {
    Side.NORTH: Side.SOUTH,
    Side.SOUTH: Side.NORTH,
    Side.EAST: Side.WEST,
    Side.WEST: Side.EAST,
}


def neighbours(pos: Pos) -> Iterator[tuple[Side, Pos]]:
    for side in Side:
        yield side, side.step(pos)


@dataclass(frozen=True, slots=True)
class Glue:
    name: str
    strength: int


@dataclass(frozen=True, slots=True)
class TileType:
    """A square tile with one glue name per side (``""`` for null)."""

    id: int
    label: str
    north: str = NULL
    east: str = NULL
    south: str = NULL
    west: str = NULL
    color: str = "white"
    family: str = ""

    def glue(self, side: Side) -> str:
        match side:
            case Side.NORTH:
                return self.north
            case Side.EAST:
                return self.east
            case Side.SOUTH:
                return self.south
            case Side.WEST:
                return self.west

    def glue_names(self) -> tuple[str, str, str, str]:
        return (self.north, self.east, self.south, self.west)


@dataclass(frozen=True, slots=True)
class TileSystem:
    """An immutable tile assembly system.

    ``seed`` lists the initial placements as ``((x, y), tile_id)`` pairs;
    use :meth:`seed_assembly` for a fresh mutable copy.
    """

    name: str
    glues: Mapping[str, Glue]
    tiles: tuple[TileType, ...]
    seed: tuple[tuple[Pos, int], ...]
    temperature: int = 2

    def strength(self, glue: str) -> int:
        if glue == NULL:
            return 0
        found = self.glues.get(glue)
        return found.strength if found is not None else 0

    def tile(self, tile_id: int) -> TileType:
        if not 0 <= tile_id < len(self.tiles):
            raise UnknownTileError(tile_id)
        return self.tiles[tile_id]

    def seed_assembly(self) -> Assembly:
        assembly = Assembly()
        for pos, tile_id in self.seed:
            assembly.place(pos, tile_id)
        return assembly


class Assembly:
    """Mutable map from grid positions to tile type ids."""

    __slots__ = ("_tiles",)

    def __init__(self, tiles: Mapping[Pos, int] | None = None) -> None:
        self._tiles: dict[Pos, int] = dict(tiles) if tiles else {}

    def place(self, pos: Pos, tile_id: int) -> None:
        if pos in self._tiles:
            raise OccupiedSiteError(pos)
        self._tiles[pos] = tile_id

    def get(self, pos: Pos) -> int | None:
        return self._tiles.get(pos)

    def __getitem__(self, pos: Pos) -> int:
        return self._tiles[pos]

    def __contains__(self, pos: object) -> bool:
        return pos in self._tiles

    def __len__(self) -> int:
        return len(self._tiles)

    def __iter__(self) -> Iterator[Pos]:
        return iter(self._tiles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Assembly):
            return NotImplemented
        return self._tiles == other._tiles

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Assembly({len(self._tiles)} tiles)"

    def items(self) -> Iterator[tuple[Pos, int]]:
        return iter(self._tiles.items())

    def copy(self) -> Assembly:
        return Assembly(self._tiles)

    def bounds(self) -> tuple[int, int, int, int]:
        """Return ``(min_x, min_y, max_x, max_y)``; the assembly must be non-empty."""
        xs = [x for x, _ in self._tiles]
        ys = [y for _, y in self._tiles]
        return (min(xs), min(ys), max(xs), max(ys))

    def row(self, y: int) -> dict[int, int]:
        return {x: tid for (x, ty), tid in self._tiles.items() if ty == y}


# ---------------------------------------------------------------------------
# Binding
# ---------------------------------------------------------------------------


def binding_strength(system: TileSystem, assembly: Assembly, pos: Pos, tile_id: int) -> int:
    """Total strength with which ``tile_id`` would bind at the empty site ``pos``."""
    if pos in assembly:
        raise OccupiedSiteError(pos)
    tile = system.tile(tile_id)
    total = 0
    for side, other_pos in neighbours(pos):
        other_id = assembly.get(other_pos)
        if other_id is None:
            continue
        glue = tile.glue(side)
        if glue != NULL and glue == system.tiles[other_id].glue(side.opposite):
            total += system.strength(glue)
    return total


class TileIndex:
    """Tile types indexed by ``(side, glue)`` for fast attachability checks."""

    def __init__(self, system: TileSystem) -> None:
        self.system = system
        self._by_glue: dict[tuple[Side, str], list[int]] = defaultdict(list)
        for tile in system.tiles:
            for side in Side:
                glue = tile.glue(side)
                if glue != NULL and system.strength(glue) > 0:
                    self._by_glue[(side, glue)].append(tile.id)

    def attachable(self, assembly: Assembly, pos: Pos) -> tuple[int, ...]:
        """Sorted ids of the tile types that may attach at the empty site ``pos``."""
        totals: dict[int, int] = defaultdict(int)
        for side, other_pos in neighbours(pos):
            other_id = assembly.get(other_pos)
            if other_id is None:
                continue
            facing = self.system.tiles[other_id].glue(side.opposite)
            if facing == NULL:
                continue
            strength = self.system.strength(facing)
            for tile_id in self._by_glue.get((side, facing), ()):
                totals[tile_id] += strength
        temperature = self.system.temperature
        return tuple(sorted(tid for tid, total in totals.items() if total >= temperature))


def frontier(system: TileSystem, assembly: Assembly) -> dict[Pos, tuple[int, ...]]:
    """Every empty site where at least one tile type can attach, with its candidates."""
    index = TileIndex(system)
    sites: set[Pos] = set()
    for pos in assembly:
        for _, other in neighbours(pos):
            if other not in assembly:
                sites.add(other)
    result: dict[Pos, tuple[int, ...]] = {}
    for site in sorted(sites, key=lambda p: (p[1], p[0])):
        candidates = index.attachable(assembly, site)
        if candidates:
            result[site] = candidates
    return result


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate(system: TileSystem) -> None:
    """Check the structural rules every tile system must satisfy."""
    if system.temperature < 1:
        raise ValidationError(f"temperature must be at least 1, got {system.temperature}")
    for name, glue in system.glues.items():
        if name != glue.name:
            raise ValidationError(f"glue table key {name!r} names glue {glue.name!r}")
        if name == NULL:
            raise ValidationError("the null glue cannot be declared")
        if glue.strength < 0:
            raise ValidationError(f"glue {name!r} has negative strength {glue.strength}")
    for expected_id, tile in enumerate(system.tiles):
        if tile.id != expected_id:
            raise ValidationError(f"tile ids must be contiguous: expected {expected_id}")
        for glue in tile.glue_names():
            if glue != NULL and glue not in system.glues:
                raise ValidationError(
                    f"tile {tile.id} ({tile.label}) uses undeclared glue {glue!r}"
                )
    if not system.seed:
        raise ValidationError("seed assembly is empty")
    placed: set[Pos] = set()
    for pos, tile_id in system.seed:
        if pos in placed:
            raise ValidationError(f"seed places two tiles at {pos[0]},{pos[1]}")
        if not 0 <= tile_id < len(system.tiles):
            raise ValidationError(f"seed uses unknown tile type {tile_id}")
        placed.add(pos)
    if not _connected(placed):
        raise ValidationError("seed assembly is not connected")


def _connected(positions: set[Pos]) -> bool:
    start = next(iter(positions))
    seen = {start}
    stack = [start]
    while stack:
        for _, other in neighbours(stack.pop()):
            if other in positions and other not in seen:
                seen.add(other)
                stack.append(other)
    return len(seen) == len(positions)
