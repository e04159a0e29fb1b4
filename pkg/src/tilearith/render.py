"""Pictures of assemblies: a character grid for terminals and SVG for everything else."""

from __future__ import annotations

from enum import Enum

import svgwrite

from tilearith.model import Assembly, TileSystem

TILE_SIZE = 20


class RenderStyle(Enum):
    TEXT = "text"
    SVG = "svg"


def render_text(assembly: Assembly, system: TileSystem) -> str:
    """One character per lattice site, north row first; ``.`` marks an empty site."""
    if not len(assembly):
        return ""
    min_x, min_y, max_x, max_y = assembly.bounds()
    lines = []
    for y in range(max_y, min_y - 1, -1):
        chars = []
        for x in range(min_x, max_x + 1):
            tile_id = assembly.get((x, y))
            chars.append("." if tile_id is None else (system.tiles[tile_id].label or "?")[0])
        lines.append("".join(chars))
    return "\n".join(lines) + "\n"


def render_svg(assembly: Assembly, system: TileSystem, tile_size: int = TILE_SIZE) -> str:
    """One square per tile, filled with the tile type's color and labelled."""
    if len(assembly):
        min_x, min_y, max_x, max_y = assembly.bounds()
    else:
        min_x = min_y = max_x = max_y = 0
    columns = max_x - min_x + 1
    rows = max_y - min_y + 1
    dwg = svgwrite.Drawing(size=(columns * tile_size, rows * tile_size))
    for (x, y), tile_id in sorted(assembly.items(), key=lambda item: (-item[0][1], item[0][0])):
        tile = system.tiles[tile_id]
        left = (x - min_x) * tile_size
        top = (max_y - y) * tile_size
        dwg.add(
            dwg.rect(
                insert=(left, top),
                size=(tile_size, tile_size),
                fill=tile.color,
                stroke=svgwrite.rgb(0, 0, 0),
            )
        )
        if tile.label:
            dwg.add(
                dwg.text(
                    tile.label,
                    insert=(left + tile_size / 2, top + tile_size / 2),
                    fill=svgwrite.rgb(0, 0, 0),
                    style="text-anchor:middle;dominant-baseline:middle;"
                    f"font-size:{tile_size // 3};font-family:sans-serif",
                )
            )
    return dwg.tostring()


def render(assembly: Assembly, system: TileSystem, style: RenderStyle = RenderStyle.TEXT) -> str:
    match style:
        case RenderStyle.TEXT:
            return render_text(assembly, system)
        case RenderStyle.SVG:
            return render_svg(assembly, system)
