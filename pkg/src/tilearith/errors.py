"""Error hierarchy shared by the frontend, compilers, simulator and file readers."""

from __future__ import annotations

from tilearith.tokens import Position

Pos = tuple[int, int]


class ExpressionError(Exception):
    """Raised on the first lexing or parsing error, with position and source context."""

    def __init__(self, message: str, position: Position, source: str) -> None:
        self.message = message
        self.position = position
        self.source = source
        super().__init__(self.format())

    def format(self, filename: str = "<expression>") -> str:
        lines = self.source.splitlines() or [""]
        line_idx = self.position.line - 1
        col = self.position.column
        source_line = lines[line_idx] if 0 <= line_idx < len(lines) else ""

        line_num = str(self.position.line)
        gutter_width = len(line_num) + 1
        blank_gutter = " " * gutter_width + "|"
        line_gutter = f"{line_num:>{gutter_width - 1}} |"

        return (
            f"error: {self.message}\n"
            f"{' ' * gutter_width}--> {filename}:{self.position.line}:{col}\n"
            f"{blank_gutter}\n"
            f"{line_gutter} {source_line}\n"
            f"{blank_gutter} {' ' * (col - 1)}^"
        )


# ---------------------------------------------------------------------------
# Compilation
# ---------------------------------------------------------------------------


class CompileError(Exception):
    """A well-formed expression that no construction accepts."""

    def format(self) -> str:
        return f"error: {self}"


class ArityError(CompileError):
    pass


class ModulusError(CompileError):
    pass


class DomainError(CompileError):
    pass


class InputOverflowError(CompileError):
    def __init__(self, message: str, value: int, width: int) -> None:
        self.value = value
        self.width = width
        super().__init__(message)


# ---------------------------------------------------------------------------
# Tile model and simulation
# ---------------------------------------------------------------------------


class ModelError(Exception):
    def format(self) -> str:
        return f"error: {self}"


class OccupiedSiteError(ModelError):
    def __init__(self, pos: Pos) -> None:
        self.pos = pos
        super().__init__(f"site {pos[0]},{pos[1]} is already occupied")


class UnknownTileError(ModelError):
    def __init__(self, tile_id: int) -> None:
        self.tile_id = tile_id
        super().__init__(f"unknown tile type {tile_id}")


class ValidationError(ModelError):
    """A tile system violates a structural rule (glue table, seed, temperature)."""


class InvalidTraceError(Exception):
    """A recorded attachment cannot be replayed."""

    def __init__(
        self,
        message: str,
        step: int,
        pos: Pos | None = None,
        tile_id: int | None = None,
        strength: int | None = None,
    ) -> None:
        self.message = message
        self.step = step
        self.pos = pos
        self.tile_id = tile_id
        self.strength = strength
        super().__init__(f"step {step}: {message}")

    def format(self) -> str:
        return f"error: {self}"


class DecodeError(Exception):
    """The terminal assembly does not carry a readable result."""

    def __init__(self, message: str, missing: tuple[Pos, ...] = ()) -> None:
        self.missing = missing
        super().__init__(message)

    def format(self) -> str:
        return f"error: {self}"


class TilesFormatError(Exception):
    """Malformed xgrow tileset or tile manifest."""

    def __init__(self, message: str, line: int, stanza: str = "") -> None:
        self.message = message
        self.line = line
        self.stanza = stanza
        super().__init__(self.format())

    def format(self, filename: str = "<tiles>") -> str:
        where = f" in '{self.stanza}'" if self.stanza else ""
        return f"error: {self.message}{where}\n  --> {filename}:{self.line}"
