"""Token types and data structures for the expression language."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto


class TokenType(Enum):
    INT = auto()  # decimal literal
    PLUS = auto()  # +
    MINUS = auto()  # -
    STAR = auto()  # *
    MOD = auto()  # mod
    PRIME = auto()  # prime
    EOF = auto()


# Reserved words; any other alphabetic run is an error.
KEYWORDS: dict[str, TokenType] = {
    "mod": TokenType.MOD,
    "prime": TokenType.PRIME,
}

OPERATORS: dict[str, TokenType] = {
    "+": TokenType.PLUS,
    "-": TokenType.MINUS,
    "*": TokenType.STAR,
}


@dataclass(frozen=True, slots=True)
class Position:
    """Source position, 1-based line and column, 0-based offset."""

    line: int
    column: int
    offset: int


@dataclass(frozen=True, slots=True)
class Span:
    """Source range from start to end position."""

    start: Position
    end: Position


@dataclass(frozen=True, slots=True)
class Token:
    type: TokenType
    value: str
    span: Span

    @property
    def position(self) -> Position:
        return self.span.start
