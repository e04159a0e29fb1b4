"""Tests for reading results off terminal assemblies."""

from __future__ import annotations

import pytest

from tests.conftest import compile_text, grow_compiled
from tilearith.decoder import DecodedResult, decode, format_result
from tilearith.errors import DecodeError
from tilearith.model import Assembly
from tilearith.specs import ExpressionKind, ResultLayout


class TestDecode:
    def test_read_region_is_result_row(self) -> None:
        compiled = compile_text("12+6")
        report = grow_compiled(compiled)
        result = decode(ExpressionKind.ADD, report.terminal, compiled.layout)
        assert result.value == 18
        assert result.read_region == compiled.result_positions()

    def test_incomplete_row(self) -> None:
        compiled = compile_text("12+6")
        with pytest.raises(DecodeError, match="result row incomplete") as exc_info:
            decode(ExpressionKind.ADD, compiled.system.seed_assembly(), compiled.layout)
        assert exc_info.value.missing == compiled.result_positions()

    def test_missing_sign_marker(self) -> None:
        layout = ResultLayout(
            ExpressionKind.SIGNED, result_columns=(0,), result_y=0, bit_tiles={1: 1}
        )
        with pytest.raises(DecodeError, match="sign marker"):
            decode(ExpressionKind.SIGNED, Assembly({(0, 0): 1}), layout)

    def test_remainder_row_located(self) -> None:
        compiled = compile_text("17 mod 5")
        report = grow_compiled(compiled)
        result = decode(ExpressionKind.SIGNED_MOD, report.terminal, compiled.layout)
        assert result.remainder == 2
        assert compiled.layout.result_y is None

    def test_no_remainder_row(self) -> None:
        compiled = compile_text("17 mod 5")
        with pytest.raises(DecodeError, match="one row"):
            decode(ExpressionKind.SIGNED_MOD, compiled.system.seed_assembly(), compiled.layout)

    def test_missing_verdict(self) -> None:
        compiled = compile_text("prime 7")
        with pytest.raises(DecodeError, match="verdict"):
            decode(ExpressionKind.PRIME, compiled.system.seed_assembly(), compiled.layout)


class TestFormatResult:
    def test_value(self) -> None:
        assert format_result(DecodedResult(ExpressionKind.ADD, value=24)) == ["result=24"]

    def test_signed(self) -> None:
        lines = format_result(DecodedResult(ExpressionKind.SIGNED, value=-4, sign=-1))
        assert lines == ["result=-4", "sign=-"]

    def test_remainder(self) -> None:
        lines = format_result(DecodedResult(ExpressionKind.SIGNED_MOD, remainder=1, sign=-1))
        assert lines == ["remainder=1", "sign=-"]

    def test_prime(self) -> None:
        assert format_result(DecodedResult(ExpressionKind.PRIME, prime=True)) == ["prime=yes"]
        assert format_result(DecodedResult(ExpressionKind.PRIME, prime=False)) == ["prime=no"]
