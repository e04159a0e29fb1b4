"""Tests for the name-preserving tile manifest."""

from __future__ import annotations

import pytest

from tests.conftest import compile_text, corner_system
from tilearith.errors import TilesFormatError
from tilearith.manifest import dump_manifest, load_manifest
from tilearith.model import NULL, validate


class TestDump:
    def test_corner_system(self) -> None:
        text = dump_manifest(corner_system())
        lines = text.splitlines()
        assert lines[0] == "tileset corner temperature=2"
        assert "glue x 1" in lines
        assert "tile 0 S N=x E=y S=- W=- color=black" in lines
        assert lines[-3:] == ["seed 0 0 0", "seed 0 1 1", "seed 1 0 2"]

    def test_family_written_when_present(self) -> None:
        text = dump_manifest(compile_text("12+6").system)
        assert " family=corner" in text


class TestLoad:
    @pytest.mark.parametrize("text", ["12+6+2+4", "6-12+4-2 mod 3", "prime 7", "3*5"])
    def test_round_trip_is_exact(self, text: str) -> None:
        system = compile_text(text).system
        restored = load_manifest(dump_manifest(system))
        assert restored == system

    def test_null_glue(self) -> None:
        system = load_manifest(dump_manifest(corner_system()))
        assert system.tiles[0].south == NULL
        validate(system)

    def test_comments_and_blank_lines(self) -> None:
        text = "# generated\n\n" + dump_manifest(corner_system())
        assert load_manifest(text) == corner_system()


class TestLoadErrors:
    def test_missing_header(self) -> None:
        with pytest.raises(TilesFormatError, match="missing tileset"):
            load_manifest("glue a 1\n")

    def test_duplicate_glue(self) -> None:
        with pytest.raises(TilesFormatError, match="declared twice") as exc_info:
            load_manifest("tileset t\nglue a 1\nglue a 2\n")
        assert exc_info.value.line == 3
        assert exc_info.value.stanza == "manifest"

    def test_missing_side(self) -> None:
        with pytest.raises(TilesFormatError, match="missing W"):
            load_manifest("tileset t\ntile 0 s N=- E=- S=- color=white family=x\n")

    def test_non_integer(self) -> None:
        with pytest.raises(TilesFormatError, match="strength must be an integer"):
            load_manifest("tileset t\nglue a strong\n")

    def test_unrecognised_line(self) -> None:
        with pytest.raises(TilesFormatError, match="unrecognised"):
            load_manifest("tileset t\nwidget 1\n")

    def test_unknown_option(self) -> None:
        with pytest.raises(TilesFormatError, match="unknown option"):
            load_manifest("tileset t speed=3\n")
