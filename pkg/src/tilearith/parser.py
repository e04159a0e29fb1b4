"""Recursive descent parser from expression text to :class:`ExpressionSpec`.

Grammar::

    request  := 'prime' INT
              | INT ('*' INT)+
              | sign? INT (sign INT)* ('mod' INT)?
    sign     := '+' | '-'

A signed request whose signs are all ``+`` and which has no modulus is an
addition.
"""

from __future__ import annotations

from tilearith.errors import ExpressionError
from tilearith.lexer import tokenize
from tilearith.specs import (
    AdditionSpec,
    ExpressionKind,
    ExpressionSpec,
    MultiplicationSpec,
    PrimalitySpec,
    SignedExpressionSpec,
)
from tilearith.tokens import Token, TokenType

_SIGNS = {TokenType.PLUS: 1, TokenType.MINUS: -1}


class Parser:
    def __init__(self, tokens: list[Token], source: str) -> None:
        self._tokens = tokens
        self._source = source
        self._pos = 0

    # ------------------------------------------------------------------
    # Navigation
    # ------------------------------------------------------------------

    def _peek(self) -> Token:
        return self._tokens[min(self._pos, len(self._tokens) - 1)]

    def _at(self, *types: TokenType) -> bool:
        return self._peek().type in types

    def _advance(self) -> Token:
        tok = self._peek()
        if tok.type != TokenType.EOF:
            self._pos += 1
        return tok

    def _expect(self, tt: TokenType, message: str) -> Token:
        if not self._at(tt):
            raise self._error(message)
        return self._advance()

    def _error(self, message: str, tok: Token | None = None) -> ExpressionError:
        tok = tok or self._peek()
        return ExpressionError(message, tok.position, self._source)

    def _int(self) -> int:
        return int(self._expect(TokenType.INT, "expected an integer").value)

    def _end(self) -> None:
        if self._at(TokenType.EOF):
            return
        tok = self._peek()
        if tok.type is TokenType.STAR:
            raise self._error("cannot mix '*' with '+' or '-'")
        if tok.type in _SIGNS:
            raise self._error(f"cannot mix '{tok.value}' with '*'")
        if tok.type is TokenType.MOD:
            raise self._error("'mod' only follows a sum or difference")
        raise self._error(f"unexpected {tok.value!r}")

    # ------------------------------------------------------------------
    # Grammar
    # ------------------------------------------------------------------

    def parse(self) -> ExpressionSpec:
        if self._at(TokenType.EOF):
            raise self._error("empty expression")
        if self._at(TokenType.PRIME):
            self._advance()
            n = self._int()
            self._end()
            return ExpressionSpec(ExpressionKind.PRIME, PrimalitySpec(n))

        first_sign = 1
        if self._at(TokenType.PLUS, TokenType.MINUS):
            first_sign = _SIGNS[self._advance().type]
        first = self._int()

        if first_sign > 0 and self._at(TokenType.STAR):
            inputs = [first]
            while self._at(TokenType.STAR):
                self._advance()
                inputs.append(self._int())
            self._end()
            return ExpressionSpec(ExpressionKind.MUL, MultiplicationSpec(tuple(inputs)))

        terms = [(first_sign, first)]
        while self._at(TokenType.PLUS, TokenType.MINUS):
            sign = _SIGNS[self._advance().type]
            terms.append((sign, self._int()))
        modulus = None
        if self._at(TokenType.MOD):
            self._advance()
            modulus = self._int()
        self._end()

        if modulus is not None:
            spec = SignedExpressionSpec(tuple(terms), modulus)
            return ExpressionSpec(ExpressionKind.SIGNED_MOD, spec)
        if all(sign > 0 for sign, _ in terms) and len(terms) > 1:
            inputs = tuple(magnitude for _, magnitude in terms)
            return ExpressionSpec(ExpressionKind.ADD, AdditionSpec(inputs))
        return ExpressionSpec(ExpressionKind.SIGNED, SignedExpressionSpec(tuple(terms)))


def parse(text: str) -> ExpressionSpec:
    """Parse an arithmetic request."""
    return Parser(tokenize(text), text).parse()


def format_expression(spec: ExpressionSpec) -> str:
    """Canonical text for ``spec``; ``parse`` of the result gives back ``spec``."""
    payload = spec.payload
    match payload:
        case PrimalitySpec(n=n):
            return f"prime {n}"
        case MultiplicationSpec(inputs=inputs):
            return "*".join(map(str, inputs))
        case AdditionSpec(inputs=inputs):
            return "+".join(map(str, inputs))
        case SignedExpressionSpec(terms=terms, modulus=modulus):
            parts = []
            for index, (sign, magnitude) in enumerate(terms):
                if sign < 0:
                    parts.append(f"-{magnitude}")
                else:
                    parts.append(f"+{magnitude}" if index else str(magnitude))
            text = "".join(parts)
            return text if modulus is None else f"{text} mod {modulus}"
    raise TypeError(f"unsupported payload {payload!r}")
