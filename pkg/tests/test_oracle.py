"""Randomised comparison of grown results against Python arithmetic."""

from __future__ import annotations

import random

import pytest

from tests.conftest import compile_text, grow_compiled
from tilearith import evaluate
from tilearith.simulator import format_trace
from tilearith.specs import AdditionVariant
from tilearith.xgrow import emit_tiles

CASES = 200


def _operands(rng: random.Random, low: int, most: int) -> list[int]:
    return [rng.randrange(low, 64) for _ in range(rng.randint(2, most))]


def _additions(seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [_operands(rng, 0, 5) for _ in range(CASES)]


def _products(seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [_operands(rng, 1, 4) for _ in range(CASES)]


def _signed(seed: int) -> list[tuple[str, int]]:
    """Expressions with at least one subtraction, paired with their value."""
    rng = random.Random(seed)
    cases = []
    for _ in range(CASES):
        terms = _operands(rng, 0, 5)
        signs = [rng.choice((1, -1)) for _ in terms]
        signs[rng.randrange(len(signs))] = -1
        text = "".join(f"{'+' if s > 0 else '-'}{v}" for s, v in zip(signs, terms, strict=True))
        value = sum(s * v for s, v in zip(signs, terms, strict=True))
        cases.append((text.removeprefix("+"), value))
    return cases


def _modular(seed: int) -> list[tuple[str, int, int]]:
    rng = random.Random(seed)
    return [(text, value, rng.randrange(2, 64)) for text, value in _signed(seed + 1)]


def _sign(value: int) -> int:
    return -1 if value < 0 else 1


# ---------------------------------------------------------------------------
# Addition
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("variant", list(AdditionVariant))
@pytest.mark.parametrize("operands", _additions(11), ids=str)
def test_addition(run, variant: AdditionVariant, operands: list[int]) -> None:
    assert run("+".join(map(str, operands)), variant).value == sum(operands)


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("operands", _products(23), ids=str)
def test_multiplication(run, operands: list[int]) -> None:
    product = 1
    for value in operands:
        product *= value
    assert run("*".join(map(str, operands))).value == product


# ---------------------------------------------------------------------------
# Signed expressions
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("text,expected", _signed(37))
def test_signed(run, text: str, expected: int) -> None:
    result = run(text)
    assert result.value == expected
    assert result.sign == _sign(expected)


@pytest.mark.parametrize("text,value,modulus", _modular(41))
def test_modular(run, text: str, value: int, modulus: int) -> None:
    result = run(f"{text} mod {modulus}")
    assert result.remainder == abs(value) % modulus
    assert result.sign == _sign(value)


# ---------------------------------------------------------------------------
# Primality
# ---------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@pytest.mark.parametrize("n", random.Random(53).sample(range(2, 64), 40))
def test_primality(n: int) -> None:
    assert evaluate(f"prime {n}").prime is _is_prime(n)


# ---------------------------------------------------------------------------
# Reproducibility
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("text", ["12+6+2+4", "5*4*3", "6-12+4-2 mod 3", "prime 7"])
def test_emission_is_byte_stable(text: str) -> None:
    first = emit_tiles(compile_text(text).system).text
    second = emit_tiles(compile_text(text).system).text
    assert first.encode() == second.encode()


@pytest.mark.parametrize("text", ["12+6+2+4", "5*4*3", "prime 9"])
def test_trace_is_stable(text: str) -> None:
    first = format_trace(grow_compiled(compile_text(text)).trace)
    second = format_trace(grow_compiled(compile_text(text)).trace)
    assert first == second
