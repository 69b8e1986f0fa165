"""Parse diagnostics for the layout DSL."""

from __future__ import annotations

from dataclasses import dataclass


E_UNKNOWN_ELEMENT = "E_UNKNOWN_ELEMENT"
E_UNEXPECTED_TOKEN = "E_UNEXPECTED_TOKEN"
E_UNTERMINATED_VALUE = "E_UNTERMINATED_VALUE"
E_MISSING_TITLE = "E_MISSING_TITLE"
E_DUPLICATE_TITLE = "E_DUPLICATE_TITLE"
E_EMPTY_DOCUMENT = "E_EMPTY_DOCUMENT"
E_DEPTH_EXCEEDED = "E_DEPTH_EXCEEDED"

ERROR_CODES = frozenset(
    {
        E_UNKNOWN_ELEMENT,
        E_UNEXPECTED_TOKEN,
        E_UNTERMINATED_VALUE,
        E_MISSING_TITLE,
        E_DUPLICATE_TITLE,
        E_EMPTY_DOCUMENT,
        E_DEPTH_EXCEEDED,
    }
)


@dataclass(frozen=True)
class Span:
    """Half-open offset range into the source text, in code points."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid span ({self.start}, {self.end})")


class ParseError(Exception):
    """First error encountered while tokenizing or parsing; no recovery."""

    def __init__(self, code: str, message: str, span: Span):
        if code not in ERROR_CODES:
            raise ValueError(f"unknown error code {code!r}")
        super().__init__(message)
        self.code = code
        self.message = message
        self.span = span

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "message": self.message,
            "span": {"start": self.span.start, "end": self.span.end},
        }

    def __repr__(self) -> str:  # pragma: no cover
        return f"ParseError({self.code}, {self.message!r}, {self.span})"


def line_column(source: str, offset: int) -> tuple[int, int]:
    """1-based (line, column) of an offset, for editor-style diagnostics."""
    prefix = source[:offset]
    line = prefix.count("\n") + 1
    column = offset - (prefix.rfind("\n") + 1) + 1
    return line, column
