"""Lexer for arithmetic requests: ``12+6+2+4``, ``6-12+4-2 mod 3``, ``5*4*3``, ``prime 5``."""

from __future__ import annotations

from tilearith.errors import ExpressionError
from tilearith.tokens import KEYWORDS, OPERATORS, Position, Span, Token, TokenType

# Largest accepted literal is one below the host word limit.
MAX_INT = 2**63 - 1

DIGITS = frozenset("0123456789")


class Lexer:
    """Tokenize an expression into INT, operator and keyword tokens."""

    def __init__(self, source: str) -> None:
        self._source = source
        self._pos = 0
        self._line = 1
        self._col = 1
        self._tokens: list[Token] = []

    def tokenize(self) -> list[Token]:
        while self._pos < len(self._source):
            ch = self._peek()
            if ch.isspace():
                self._advance()
            elif ch in DIGITS:
                self._lex_int()
            elif ch.isalpha():
                self._lex_word()
            elif ch in OPERATORS:
                start = self._current_pos()
                self._advance()
                self._emit(OPERATORS[ch], ch, start)
            else:
                raise self._error(f"unexpected character {ch!r}")
        self._emit(TokenType.EOF, "")
        return self._tokens

    # ------------------------------------------------------------------
    # Position helpers
    # ------------------------------------------------------------------

    def _current_pos(self) -> Position:
        return Position(self._line, self._col, self._pos)

    def _peek(self) -> str:
        if self._pos < len(self._source):
            return self._source[self._pos]
        return ""

    def _advance(self) -> str:
        ch = self._source[self._pos]
        self._pos += 1
        if ch == "\n":
            self._line += 1
            self._col = 1
        else:
            self._col += 1
        return ch

    def _emit(self, tt: TokenType, value: str, start: Position | None = None) -> Token:
        end = self._current_pos()
        tok = Token(tt, value, Span(start or end, end))
        self._tokens.append(tok)
        return tok

    def _error(self, message: str, pos: Position | None = None) -> ExpressionError:
        return ExpressionError(message, pos or self._current_pos(), self._source)

    # ------------------------------------------------------------------
    # Tokens
    # ------------------------------------------------------------------

    def _lex_int(self) -> None:
        start = self._current_pos()
        while self._peek() in DIGITS:
            self._advance()
        text = self._source[start.offset : self._pos]
        if len(text.lstrip("0")) > 19 or int(text) > MAX_INT:
            raise self._error(f"integer {text} exceeds {MAX_INT}", start)
        self._emit(TokenType.INT, text, start)

    def _lex_word(self) -> None:
        start = self._current_pos()
        while self._peek().isalpha():
            self._advance()
        word = self._source[start.offset : self._pos]
        tt = KEYWORDS.get(word.lower())
        if tt is None:
            raise self._error(f"unknown word {word!r}", start)
        self._emit(tt, word, start)


def tokenize(source: str) -> list[Token]:
    return Lexer(source).tokenize()
