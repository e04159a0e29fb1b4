"""--debug dumps of tile systems and simulation traces to stderr."""

from __future__ import annotations

import sys
from typing import TextIO

from tilearith.model import NULL, TileSystem
from tilearith.simulator import SimulationReport, format_trace


def dump_system(system: TileSystem, *, file: TextIO = sys.stderr) -> None:
    """Print the glue table, tile table and seed placements to *file*."""
    file.write(f"TileSystem {system.name} temperature={system.temperature}\n")
    file.write(f"  Glues ({len(system.glues)})\n")
    for glue in system.glues.values():
        file.write(f"    {glue.name} strength={glue.strength}\n")
    file.write(f"  Tiles ({len(system.tiles)})\n")
    for tile in system.tiles:
        sides = " ".join(g if g != NULL else "-" for g in tile.glue_names())
        file.write(f"    {tile.id:>4} {tile.label:<6} [{sides}] {tile.family}\n")
    file.write("  Seed\n")
    for (x, y), tile_id in system.seed:
        file.write(f"    {x},{y} <- {tile_id}\n")


def dump_trace(report: SimulationReport, *, file: TextIO = sys.stderr) -> None:
    file.write(format_trace(report.trace))
    deterministic = str(report.deterministic).lower()
    halted = str(report.halted).lower()
    file.write(f"steps={report.steps} deterministic={deterministic} halted={halted}\n")
