"""Minimal LSP server for .tiles and tile manifest files (diagnostics only)."""

from __future__ import annotations

from lsprotocol.types import (
    TEXT_DOCUMENT_DID_CHANGE,
    TEXT_DOCUMENT_DID_OPEN,
    Diagnostic,
    DiagnosticSeverity,
    DidChangeTextDocumentParams,
    DidOpenTextDocumentParams,
    Position,
    PublishDiagnosticsParams,
    Range,
    TextDocumentSyncKind,
)
from pygls.lsp.server import LanguageServer

from tilearith.errors import TilesFormatError, ValidationError
from tilearith.manifest import load_manifest
from tilearith.model import TileSystem, validate
from tilearith.xgrow import parse_tiles

server = LanguageServer(
    "tilearith-lsp", "0.1.0", text_document_sync_kind=TextDocumentSyncKind.Full
)


def load_document(uri: str, source: str) -> TileSystem:
    """Parse ``source`` as a manifest when ``uri`` says so, otherwise as xgrow tiles."""
    if uri.endswith((".manifest", ".tman")):
        return load_manifest(source)
    return parse_tiles(source)


def diagnostics_for(uri: str, source: str) -> list[Diagnostic]:
    try:
        system = load_document(uri, source)
    except TilesFormatError as exc:
        line = max(exc.line - 1, 0)
        message = exc.message if not exc.stanza else f"{exc.message} in '{exc.stanza}'"
        return [
            Diagnostic(
                range=Range(
                    start=Position(line=line, character=0),
                    end=Position(line=line + 1, character=0),
                ),
                message=message,
                severity=DiagnosticSeverity.Error,
                source="tilearith",
            )
        ]

    try:
        validate(system)
    except ValidationError as exc:
        end_line = max(source.count("\n"), 1)
        return [
            Diagnostic(
                range=Range(
                    start=Position(line=0, character=0),
                    end=Position(line=end_line, character=0),
                ),
                message=str(exc),
                severity=DiagnosticSeverity.Warning,
                source="tilearith",
            )
        ]
    return []


def _validate(ls: LanguageServer, uri: str) -> None:
    doc = ls.workspace.get_text_document(uri)
    ls.text_document_publish_diagnostics(
        PublishDiagnosticsParams(uri=uri, diagnostics=diagnostics_for(uri, doc.source))
    )


@server.feature(TEXT_DOCUMENT_DID_OPEN)
def did_open(ls: LanguageServer, params: DidOpenTextDocumentParams) -> None:
    _validate(ls, params.text_document.uri)


@server.feature(TEXT_DOCUMENT_DID_CHANGE)
def did_change(ls: LanguageServer, params: DidChangeTextDocumentParams) -> None:
    _validate(ls, params.text_document.uri)


def main() -> None:
    server.start_io()
