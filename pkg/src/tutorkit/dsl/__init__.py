"""Compact layout DSL: tokenizer, parser, canonical printer, node helpers."""

from .errors import (
    E_DEPTH_EXCEEDED,
    E_DUPLICATE_TITLE,
    E_EMPTY_DOCUMENT,
    E_MISSING_TITLE,
    E_UNEXPECTED_TOKEN,
    E_UNKNOWN_ELEMENT,
    E_UNTERMINATED_VALUE,
    ParseError,
    Span,
    line_column,
)
from .nodes import (
    Column,
    Element,
    Fragment,
    Input,
    Label,
    Path,
    Row,
    TutorLayout,
    assign_ids,
    count_nodes,
    element_from_json,
    element_to_json,
    fragment_to_json,
    layout_to_json,
    make_layout,
    walk,
)
from .parser import MAX_DEPTH, parse_document, parse_fragment
from .printer import escape_value, pretty_print
from .tokens import Token, TokenKind, tokenize

__all__ = [
    "Column",
    "Element",
    "Fragment",
    "Input",
    "Label",
    "MAX_DEPTH",
    "ParseError",
    "Path",
    "Row",
    "Span",
    "Token",
    "TokenKind",
    "TutorLayout",
    "assign_ids",
    "count_nodes",
    "element_from_json",
    "element_to_json",
    "escape_value",
    "fragment_to_json",
    "layout_to_json",
    "line_column",
    "make_layout",
    "parse_document",
    "parse_fragment",
    "pretty_print",
    "tokenize",
    "walk",
    "E_DEPTH_EXCEEDED",
    "E_DUPLICATE_TITLE",
    "E_EMPTY_DOCUMENT",
    "E_MISSING_TITLE",
    "E_UNEXPECTED_TOKEN",
    "E_UNKNOWN_ELEMENT",
    "E_UNTERMINATED_VALUE",
]
