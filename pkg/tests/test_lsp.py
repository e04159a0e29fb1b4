"""Tests for the LSP server: diagnostic generation."""

from __future__ import annotations

import pytest
from lsprotocol.types import (
    DiagnosticSeverity,
    PublishDiagnosticsParams,
    TextDocumentItem,
    TextDocumentSyncKind,
)
from pygls.lsp.server import LanguageServer
from pygls.workspace import Workspace

from tests.conftest import compile_text, corner_system
from tilearith.lsp import _validate, diagnostics_for
from tilearith.manifest import dump_manifest
from tilearith.xgrow import emit_tiles

TILES_URI = "file:///test.tiles"
MANIFEST_URI = "file:///test.manifest"


@pytest.fixture
def lsp_env():
    """Create a LanguageServer with an initialized workspace and captured diagnostics."""
    ls = LanguageServer("test", "v0", text_document_sync_kind=TextDocumentSyncKind.Full)
    ws = Workspace(None)
    ls.protocol._workspace = ws

    published: list[PublishDiagnosticsParams] = []
    ls.text_document_publish_diagnostics = lambda params: published.append(params)

    def put(source: str, uri: str = TILES_URI) -> None:
        ws.put_text_document(
            TextDocumentItem(uri=uri, language_id="tiles", version=0, text=source)
        )

    return ls, published, put


# ---------------------------------------------------------------------------
# Format errors → Error severity
# ---------------------------------------------------------------------------


class TestFormatErrors:
    def test_malformed_tile_row(self, lsp_env) -> None:
        ls, published, put = lsp_env
        put("tile edges={\n{1 2 x 0}\n}\nbinding strengths={1 1}\n")
        _validate(ls, TILES_URI)

        assert len(published) == 1
        diags = published[0].diagnostics
        assert len(diags) == 1
        d = diags[0]
        assert d.severity == DiagnosticSeverity.Error
        assert "malformed tile row" in d.message
        assert "'tile edges'" in d.message
        assert d.source == "tilearith"
        assert d.range.start.line == 1

    def test_missing_strengths(self, lsp_env) -> None:
        ls, published, put = lsp_env
        put("tile edges={\n{0 0 0 0}\n}\n")
        _validate(ls, TILES_URI)

        d = published[0].diagnostics[0]
        assert d.severity == DiagnosticSeverity.Error
        assert "binding strengths" in d.message

    def test_manifest_error(self, lsp_env) -> None:
        ls, published, put = lsp_env
        put("tileset t temperature=2\nglue a two\n", uri=MANIFEST_URI)
        _validate(ls, MANIFEST_URI)

        d = published[0].diagnostics[0]
        assert d.severity == DiagnosticSeverity.Error
        assert "strength must be an integer" in d.message
        assert d.range.start.line == 1


# ---------------------------------------------------------------------------
# Structural problems → Warning severity
# ---------------------------------------------------------------------------


class TestValidation:
    def test_disconnected_seed(self, lsp_env) -> None:
        ls, published, put = lsp_env
        put(
            "% seed 0 0 0\n% seed 5 5 0\n"
            "tile edges={\n{1 0 0 0}\n}\nbinding strengths={1}\n"
        )
        _validate(ls, TILES_URI)

        d = published[0].diagnostics[0]
        assert d.severity == DiagnosticSeverity.Warning
        assert "not connected" in d.message
        assert d.range.start.line == 0

    def test_undeclared_glue_in_manifest(self) -> None:
        source = "tileset t\ntile 0 A N=x E=- S=- W=- color=white\nseed 0 0 0\n"
        diags = diagnostics_for(MANIFEST_URI, source)
        assert len(diags) == 1
        assert diags[0].severity == DiagnosticSeverity.Warning
        assert "undeclared glue" in diags[0].message


# ---------------------------------------------------------------------------
# Valid documents → no diagnostics
# ---------------------------------------------------------------------------


class TestValidDocuments:
    def test_emitted_tiles(self, lsp_env) -> None:
        ls, published, put = lsp_env
        put(emit_tiles(compile_text("12+6").system).text)
        _validate(ls, TILES_URI)

        assert len(published) == 1
        assert published[0].uri == TILES_URI
        assert published[0].diagnostics == []

    def test_manifest_uri(self) -> None:
        assert diagnostics_for(MANIFEST_URI, dump_manifest(corner_system())) == []

    def test_tman_extension(self) -> None:
        source = dump_manifest(corner_system())
        assert diagnostics_for("file:///corner.tman", source) == []

    def test_manifest_text_under_tiles_uri_is_an_error(self) -> None:
        diags = diagnostics_for(TILES_URI, dump_manifest(corner_system()))
        assert diags[0].severity == DiagnosticSeverity.Error
