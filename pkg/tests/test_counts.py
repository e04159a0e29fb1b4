"""Tests for closed-form tile counts against generated systems and grown assemblies."""

from __future__ import annotations

import pytest

from tests.conftest import compile_text, grow_compiled
from tilearith.addition import compile_addition
from tilearith.counts import TileCount, expected_tile_counts, type_counts, usage_counts
from tilearith.specs import (
    AdditionSpec,
    AdditionVariant,
    MultiplicationSpec,
    PrimalitySpec,
    SignedExpressionSpec,
)


def _by_family(rows: tuple[TileCount, ...]) -> dict[str, TileCount]:
    return {row.family: row for row in rows}


class TestAdditionOverall:
    def test_worked_example(self) -> None:
        counts = _by_family(expected_tile_counts(AdditionSpec((12, 6, 2, 4))))
        assert counts["left-frame"].overall == 5
        assert counts["corner"].overall == 4
        assert counts["right-frame"].overall == 5
        assert counts["top-frame"].overall == 7
        assert counts["input"].overall == 21
        assert counts["computational"].overall == 14

    @pytest.mark.parametrize("variant", [AdditionVariant.EIGHT_TILE, AdditionVariant.SIX_TILE])
    @pytest.mark.parametrize(
        "inputs", [(1, 1), (12, 6), (12, 6, 2, 4), (63, 0, 5, 9, 31), (7, 7, 7)]
    )
    def test_usage_matches(self, variant: AdditionVariant, inputs: tuple[int, ...]) -> None:
        spec = AdditionSpec(inputs, variant)
        compiled = compile_addition(spec)
        usage = usage_counts(compiled.system, grow_compiled(compiled).terminal)
        for row in expected_tile_counts(spec):
            assert usage[row.family] == row.overall, row.family

    @pytest.mark.parametrize("m", range(1, 7))
    @pytest.mark.parametrize("n", range(2, 7))
    def test_usage_over_grid(self, n: int, m: int) -> None:
        spec = AdditionSpec((2**m - 1, *((1,) * (n - 1))))
        assert (spec.n, spec.m) == (n, m)
        compiled = compile_addition(spec)
        usage = usage_counts(compiled.system, grow_compiled(compiled).terminal)
        for row in expected_tile_counts(spec):
            assert usage[row.family] == row.overall, row.family

    def test_computational_types(self) -> None:
        eight = AdditionSpec((1, 2, 3))
        six = AdditionSpec((1, 2, 3), AdditionVariant.SIX_TILE)
        assert _by_family(expected_tile_counts(eight))["computational"].types == 8
        assert _by_family(expected_tile_counts(six))["computational"].types == 6
        assert type_counts(compile_addition(six).system)["computational"] == 6


class TestLType:
    @pytest.mark.parametrize("inputs", [(6, 4, 3, 5), (12, 6), (1, 0, 63)])
    def test_types_and_usage(self, inputs: tuple[int, ...]) -> None:
        spec = AdditionSpec(inputs, AdditionVariant.L_TYPE)
        compiled = compile_addition(spec)
        types = type_counts(compiled.system)
        usage = usage_counts(compiled.system, grow_compiled(compiled).terminal)
        for row in expected_tile_counts(spec):
            assert types[row.family] == row.types, row.family
            assert usage[row.family] == row.overall, row.family


class TestOtherTables:
    @pytest.mark.parametrize(
        "text",
        [
            "5*4*3",
            "7*3*2",
            "1*1",
            "13*11",
            "6-12+4-2",
            "10-3",
            "-3+5",
            "-7",
            "1-1-1-1",
            "6-12+4-2 mod 3",
            "17 mod 5",
            "-9 mod 4",
            "7 mod 7",
            "prime 2",
            "prime 5",
            "prime 9",
            "prime 29",
        ],
    )
    def test_every_row_matches(self, text: str) -> None:
        compiled = compile_text(text)
        spec = compiled.spec.payload
        types = type_counts(compiled.system)
        usage = usage_counts(compiled.system, grow_compiled(compiled).terminal)
        rows = expected_tile_counts(spec)
        assert {row.family for row in rows} == set(types)
        for row in rows:
            assert types[row.family] == row.types, row.family
            assert usage[row.family] == row.overall, row.family
        assert sum(row.overall for row in rows) == compiled.expected_area

    def test_multiplication_worked_example(self) -> None:
        counts = _by_family(expected_tile_counts(MultiplicationSpec((5, 4, 3))))
        assert counts["seed"] == TileCount("seed", 1, 1)
        assert counts["computational"].types == 20

    def test_signed_computational(self) -> None:
        spec = SignedExpressionSpec(((1, 6), (-1, 12), (1, 4), (-1, 2)))
        counts = _by_family(expected_tile_counts(spec))
        assert counts["computational+"] == TileCount("computational+", 8, 7)
        assert counts["computational-"] == TileCount("computational-", 8, 14)

    def test_primality_families(self) -> None:
        counts = _by_family(expected_tile_counts(PrimalitySpec(29)))
        assert [counts[f].types for f in ("converter", "check-k-gt-1", "check-c-gt-b")] == [
            4,
            12,
            24,
        ]
        assert [counts[f].types for f in ("move", "subtract-b-c", "subtract-c-1")] == [4, 16, 16]

    def test_unsupported(self) -> None:
        with pytest.raises(TypeError):
            expected_tile_counts("12+6")  # type: ignore[arg-type]
