"""Incremental construction of tile systems for the arithmetic compilers."""

from __future__ import annotations

from tilearith.model import NULL, Glue, Pos, TileSystem, TileType

# Red shows a 1 bit, white a 0 bit.
BIT_COLORS = ("white", "red")

FAMILY_COLORS: dict[str, str] = {
    "seed": "black",
    "corner": "black",
    "left-frame": "gray",
    "right-frame": "gray",
    "vertical-frame": "gray",
    "horizontal-frame": "tan",
    "top-frame": "gray",
    "input": "tan",
}

DEFAULT_COLOR = "lightblue"


class SystemBuilder:
    """Accumulates namespaced glues, tile types and seed placements.

    Glue labels passed to :meth:`glue` are prefixed with the namespace, so two
    constructions never share a glue by accident.
    """

    def __init__(self, name: str, namespace: str, temperature: int = 2) -> None:
        self.name = name
        self.namespace = namespace
        self.temperature = temperature
        self._glues: dict[str, Glue] = {}
        self._tiles: list[TileType] = []
        self._seed: list[tuple[Pos, int]] = []

    def glue(self, label: str, strength: int = 1) -> str:
        name = f"{self.namespace}:{label}"
        existing = self._glues.get(name)
        if existing is None:
            self._glues[name] = Glue(name, strength)
        elif existing.strength != strength:
            raise ValueError(
                f"glue {name} declared with strength {existing.strength} and {strength}"
            )
        return name

    def tile(
        self,
        label: str,
        family: str,
        *,
        north: str = NULL,
        east: str = NULL,
        south: str = NULL,
        west: str = NULL,
        color: str | None = None,
    ) -> int:
        tile_id = len(self._tiles)
        if color is None:
            color = FAMILY_COLORS.get(family, DEFAULT_COLOR)
        self._tiles.append(TileType(tile_id, label, north, east, south, west, color, family))
        return tile_id

    def seed(self, pos: Pos, tile_id: int) -> None:
        self._seed.append((pos, tile_id))

    def build(self) -> TileSystem:
        return TileSystem(
            self.name, dict(self._glues), tuple(self._tiles), tuple(self._seed), self.temperature
        )

    def cap_row(self, width: int, south: str, *, corner_family: str = "corner") -> None:
        """Add a top row grown westward from a corner sitting on the right frame.

        ``south`` is the strength-2 glue the top-right corner binds to; the row
        holds ``width`` position-specific caps and ends with the top-left corner.
        """
        self.tile("+", corner_family, south=south, west=self.glue("^0", 2))
        for i in range(width):
            self.tile("=", "top-frame", east=self.glue(f"^{i}", 2), west=self.glue(f"^{i + 1}", 2))
        self.tile("+", corner_family, east=self.glue(f"^{width}", 2))
