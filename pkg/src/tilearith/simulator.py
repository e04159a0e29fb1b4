"""Growth of a tile system from its seed to a terminal assembly."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from tilearith.errors import InvalidTraceError, UnknownTileError, ValidationError
from tilearith.model import (
    Assembly,
    Pos,
    TileIndex,
    TileSystem,
    binding_strength,
    neighbours,
    validate,
)

DEFAULT_MAX_STEPS = 1_000_000

Attachment = tuple[Pos, int]


class Order(Enum):
    """Order in which attachable sites are served."""

    LEX = "lex"  # lowest y, then lowest x
    FIFO = "fifo"
    LIFO = "lifo"


@dataclass(frozen=True, slots=True)
class SimulationReport:
    terminal: Assembly
    steps: int
    trace: tuple[Attachment, ...]
    deterministic: bool
    halted: bool
    conflicts: tuple[Pos, ...] = field(default=())


class _SiteQueue:
    def __init__(self, order: Order) -> None:
        self.order = order
        self._heap: list[tuple[int, int]] = []
        self._deque: deque[Pos] = deque()

    def push(self, pos: Pos) -> None:
        if self.order is Order.LEX:
            heapq.heappush(self._heap, (pos[1], pos[0]))
        else:
            self._deque.append(pos)

    def pop(self) -> Pos:
        match self.order:
            case Order.LEX:
                y, x = heapq.heappop(self._heap)
                return (x, y)
            case Order.FIFO:
                return self._deque.popleft()
            case Order.LIFO:
                return self._deque.pop()

    def __bool__(self) -> bool:
        return bool(self._heap) or bool(self._deque)


def grow(
    system: TileSystem,
    max_steps: int | None = None,
    order: Order = Order.LEX,
) -> SimulationReport:
    """Attach tiles one at a time until no site is attachable or the step limit is hit.

    When two or more tile types compete for a site the lowest id is attached
    and the run is reported as nondeterministic.
    """
    validate(system)
    limit = DEFAULT_MAX_STEPS if max_steps is None else max_steps
    if limit < 1:
        raise ValidationError(f"max_steps must be positive, got {limit}")

    index = TileIndex(system)
    assembly = system.seed_assembly()
    queue = _SiteQueue(order)
    queued: set[Pos] = set()

    def consider(pos: Pos) -> None:
        if pos in assembly or pos in queued:
            return
        if index.attachable(assembly, pos):
            queued.add(pos)
            queue.push(pos)

    for pos, _ in system.seed:
        for _, other in neighbours(pos):
            consider(other)

    trace: list[Attachment] = []
    conflicts: list[Pos] = []
    while queue and len(trace) < limit:
        pos = queue.pop()
        queued.discard(pos)
        candidates = index.attachable(assembly, pos)
        if len(candidates) > 1:
            conflicts.append(pos)
        tile_id = candidates[0]
        assembly.place(pos, tile_id)
        trace.append((pos, tile_id))
        for _, other in neighbours(pos):
            consider(other)

    return SimulationReport(
        terminal=assembly,
        steps=len(trace),
        trace=tuple(trace),
        deterministic=not conflicts,
        halted=not queue,
        conflicts=tuple(conflicts),
    )


def replay(system: TileSystem, trace: list[Attachment] | tuple[Attachment, ...]) -> Assembly:
    """Re-apply a recorded trace, checking every step against the attachment rule."""
    validate(system)
    assembly = system.seed_assembly()
    for step, (pos, tile_id) in enumerate(trace):
        if pos in assembly:
            raise InvalidTraceError(
                f"site {pos[0]},{pos[1]} is already occupied", step, pos, tile_id
            )
        try:
            strength = binding_strength(system, assembly, pos, tile_id)
        except UnknownTileError as exc:
            raise InvalidTraceError(str(exc), step, pos, tile_id) from exc
        if strength < system.temperature:
            raise InvalidTraceError(
                f"tile {tile_id} binds at {pos[0]},{pos[1]} with strength {strength}, "
                f"below temperature {system.temperature}",
                step,
                pos,
                tile_id,
                strength,
            )
        assembly.place(pos, tile_id)
    return assembly


# ---------------------------------------------------------------------------
# Trace files
# ---------------------------------------------------------------------------


def format_trace(trace: tuple[Attachment, ...] | list[Attachment]) -> str:
    return "".join(
        f"attach {step} {x} {y} {tile_id}\n" for step, ((x, y), tile_id) in enumerate(trace)
    )


def parse_trace(text: str) -> list[Attachment]:
    trace: list[Attachment] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5 or parts[0] != "attach":
            raise InvalidTraceError(
                f"line {line_no}: expected 'attach <step> <x> <y> <tile>'", len(trace)
            )
        try:
            step, x, y, tile_id = (int(p) for p in parts[1:])
        except ValueError as exc:
            raise InvalidTraceError(f"line {line_no}: non-integer field", len(trace)) from exc
        if step != len(trace):
            raise InvalidTraceError(f"line {line_no}: expected step {len(trace)}", len(trace))
        trace.append(((x, y), tile_id))
    return trace
