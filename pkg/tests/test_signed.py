"""Tests for signed add/subtract expressions and their reduction modulo t."""

from __future__ import annotations

import pytest

from tests.conftest import compile_text, grow_compiled
from tilearith.errors import ArityError, DomainError, ModulusError
from tilearith.signed import compile_addsub, compile_modexpr, signed_width
from tilearith.specs import SignedExpressionSpec

# ---------------------------------------------------------------------------
# Signed values
# ---------------------------------------------------------------------------


class TestSignedValues:
    def test_worked_example(self, run) -> None:
        result = run("6-12+4-2")
        assert result.value == -4
        assert result.sign == -1

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("10-3", 7),
            ("3-10", -7),
            ("-3+5", 2),
            ("-7", -7),
            ("5", 5),
            ("0", 0),
            ("-0", 0),
            ("1-1-1-1", -2),
            ("63-0+63", 126),
        ],
    )
    def test_values(self, run, text: str, expected: int) -> None:
        assert run(text).value == expected

    def test_zero_is_positive(self, run) -> None:
        assert run("4-4").sign == 1

    def test_magnitude_row(self) -> None:
        compiled = compile_text("6-12+4-2")
        report = grow_compiled(compiled)
        row = report.terminal.row(compiled.layout.result_y)
        bits = [compiled.layout.bit_tiles[row[x]] for x in range(7)]
        assert bits == [0, 0, 0, 0, 1, 0, 0]

    def test_running_rows_in_twos_complement(self) -> None:
        compiled = compile_text("6-12+4-2")
        report = grow_compiled(compiled)
        system = compiled.system

        def row_text(y: int) -> str:
            row = report.terminal.row(y)
            return "".join(system.tiles[row[x]].label[0] for x in range(7))

        # 6-12 = -6, 6-12+4 = -2, 6-12+4-2 = -4
        assert [row_text(y) for y in (1, 3, 5)] == ["1111010", "1111110", "1111100"]

    def test_sign_marker_on_left_frame(self) -> None:
        compiled = compile_text("6-12+4-2")
        report = grow_compiled(compiled)
        tile_id = report.terminal[(-1, compiled.layout.result_y)]
        assert compiled.layout.sign_tiles[tile_id] == -1


class TestWidth:
    def test_worked_example_width(self) -> None:
        terms = ((1, 6), (-1, 12), (1, 4), (-1, 2))
        assert signed_width(terms) == 7

    def test_sum_of_magnitudes_widens(self) -> None:
        terms = ((1, 63), (1, 63))
        assert signed_width(terms) == 8

    def test_modulus_widens(self) -> None:
        assert signed_width(((1, 1), (1, 0)), 100) == 7


class TestNormalization:
    def test_leading_negative_gets_zero(self) -> None:
        spec = SignedExpressionSpec(((-1, 3), (1, 5)))
        assert spec.normalized() == ((1, 0), (-1, 3), (1, 5))

    def test_single_term_padded(self) -> None:
        assert SignedExpressionSpec(((1, 5),)).normalized() == ((1, 5), (1, 0))

    def test_single_negative_term(self) -> None:
        spec = SignedExpressionSpec(((-1, 5),))
        assert spec.normalized() == ((1, 0), (-1, 5))


class TestTiles:
    def test_computational_families(self) -> None:
        system = compile_addsub(SignedExpressionSpec(((1, 6), (-1, 12)))).system
        families = [t.family for t in system.tiles]
        assert families.count("computational+") == 8
        assert families.count("computational-") == 8

    def test_namespaces(self) -> None:
        plain = compile_addsub(SignedExpressionSpec(((1, 6), (-1, 2)))).system
        modular = compile_modexpr(SignedExpressionSpec(((1, 6), (-1, 2)), 3)).system
        assert all(name.startswith("pm:") for name in plain.glues)
        assert all(name.startswith("mod:") for name in modular.glues)


# ---------------------------------------------------------------------------
# Modular expressions
# ---------------------------------------------------------------------------


class TestModular:
    def test_worked_example(self, run) -> None:
        result = run("6-12+4-2 mod 3")
        assert result.remainder == 1
        assert result.sign == -1
        assert result.value is None

    @pytest.mark.parametrize(
        "text,remainder,sign",
        [
            ("17 mod 5", 2, 1),
            ("5 mod 7", 5, 1),
            ("12-12 mod 3", 0, 1),
            ("-9 mod 4", 1, -1),
            ("20+20 mod 2", 0, 1),
            ("7 mod 7", 0, 1),
        ],
    )
    def test_remainders(self, run, text: str, remainder: int, sign: int) -> None:
        result = run(text)
        assert result.remainder == remainder
        assert result.sign == sign

    def test_row_kinds_count_rounds(self) -> None:
        compiled = compile_text("17 mod 5")
        assert compiled.row_kinds.count("subtract") == 3
        assert compiled.row_kinds[-2:] == ("compare", "display")

    def test_addsub_with_modulus_delegates(self) -> None:
        compiled = compile_addsub(SignedExpressionSpec(((1, 17),), 5))
        assert compiled.system.name == "mod_5_tile_17"


class TestErrors:
    def test_no_terms(self) -> None:
        with pytest.raises(ArityError):
            compile_addsub(SignedExpressionSpec(()))

    def test_modulus_too_small(self) -> None:
        with pytest.raises(ModulusError):
            compile_modexpr(SignedExpressionSpec(((1, 5),), 1))

    def test_missing_modulus(self) -> None:
        with pytest.raises(ModulusError):
            compile_modexpr(SignedExpressionSpec(((1, 5),)))

    def test_bad_sign(self) -> None:
        with pytest.raises(DomainError):
            compile_addsub(SignedExpressionSpec(((2, 5),)))
