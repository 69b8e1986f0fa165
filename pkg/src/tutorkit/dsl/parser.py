"""Recursive-descent parser for tutor layout documents and fragments.

Grammar::

    document := title element*
    fragment := element+
    title    := "title" "[" VALUE "]"
    element  := row | column | label | input
    row      := "row" "{" element* "}"
    column   := "column" "{" element* "}"
    label    := "label" "[" VALUE "]"
    input    := "input" ("[" VALUE "]")?

Parsing stops at the first error; the resulting diagnostic feeds the
generation repair loop verbatim, so one precise error beats a cascade.
"""

from __future__ import annotations

from .errors import (
    E_DEPTH_EXCEEDED,
    E_DUPLICATE_TITLE,
    E_EMPTY_DOCUMENT,
    E_MISSING_TITLE,
    E_UNEXPECTED_TOKEN,
    E_UNKNOWN_ELEMENT,
    ParseError,
    Span,
)
from .nodes import Column, Element, Fragment, Input, Label, Row, TutorLayout, make_layout
from .tokens import Token, TokenKind, tokenize

MAX_DEPTH = 8


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.END_OF_INPUT:
            self.pos += 1
        return token

    def expect(self, kind: TokenKind) -> Token:
        token = self.current
        if token.kind is not kind:
            raise ParseError(
                E_UNEXPECTED_TOKEN,
                f"expected '{kind.value}', found {token.describe()}",
                token.span,
            )
        return self.advance()

    def bracketed_value(self) -> tuple[str, Span]:
        """Parse "[" VALUE "]" and return (decoded value, value span)."""
        open_bracket = self.expect(TokenKind.LBRACKET)
        if self.current.kind is TokenKind.TEXT:
            text = self.advance()
            self.expect(TokenKind.RBRACKET)
            return text.text, text.span
        close = self.expect(TokenKind.RBRACKET)
        return "", Span(open_bracket.span.start, close.span.end)

    def element(self, depth: int, in_document: bool) -> Element:
        token = self.current
        if token.kind is TokenKind.KEYWORD_ROW or token.kind is TokenKind.KEYWORD_COLUMN:
            if depth + 1 > MAX_DEPTH:
                raise ParseError(
                    E_DEPTH_EXCEEDED,
                    f"containers nested deeper than {MAX_DEPTH} levels",
                    token.span,
                )
            self.advance()
            self.expect(TokenKind.LBRACE)
            children: list[Element] = []
            while self.current.kind is not TokenKind.RBRACE:
                if self.current.kind is TokenKind.END_OF_INPUT:
                    raise ParseError(
                        E_UNEXPECTED_TOKEN,
                        "expected '}' before end of input",
                        self.current.span,
                    )
                children.append(self.element(depth + 1, in_document))
            self.expect(TokenKind.RBRACE)
            container = Row if token.kind is TokenKind.KEYWORD_ROW else Column
            return container(tuple(children))
        if token.kind is TokenKind.KEYWORD_LABEL:
            self.advance()
            value, span = self.bracketed_value()
            if not value.strip():
                raise ParseError(E_UNEXPECTED_TOKEN, "label value must not be blank", span)
            return Label(value)
        if token.kind is TokenKind.KEYWORD_INPUT:
            self.advance()
            if self.current.kind is TokenKind.LBRACKET:
                placeholder, _ = self.bracketed_value()
                return Input(placeholder)
            return Input(None)
        if token.kind is TokenKind.KEYWORD_TITLE:
            if in_document:
                raise ParseError(
                    E_DUPLICATE_TITLE, "document already has a title", token.span
                )
            raise ParseError(
                E_UNEXPECTED_TOKEN, "fragments may not contain a title", token.span
            )
        if token.kind is TokenKind.WORD:
            raise ParseError(
                E_UNKNOWN_ELEMENT,
                f"unknown element {token.text!r}; allowed elements are "
                "title, row, column, label, input",
                token.span,
            )
        raise ParseError(
            E_UNEXPECTED_TOKEN, f"expected an element, found {token.describe()}", token.span
        )


def parse_document(source: str) -> TutorLayout:
    """Parse a full tutor document: one leading title, then elements."""
    tokens = tokenize(source)
    parser = _Parser(tokens)
    if parser.current.kind is TokenKind.END_OF_INPUT:
        raise ParseError(E_EMPTY_DOCUMENT, "document is empty", parser.current.span)
    if parser.current.kind is not TokenKind.KEYWORD_TITLE:
        raise ParseError(
            E_MISSING_TITLE,
            "document must start with title[...]",
            parser.current.span,
        )
    parser.advance()
    title, title_span = parser.bracketed_value()
    if not title.strip():
        raise ParseError(E_MISSING_TITLE, "title value must not be blank", title_span)
    body: list[Element] = []
    while parser.current.kind is not TokenKind.END_OF_INPUT:
        body.append(parser.element(0, in_document=True))
    return make_layout(title, body)


def parse_fragment(source: str) -> Fragment:
    """Parse a titleless element sequence (one or more elements)."""
    tokens = tokenize(source)
    parser = _Parser(tokens)
    if parser.current.kind is TokenKind.END_OF_INPUT:
        raise ParseError(E_EMPTY_DOCUMENT, "fragment is empty", parser.current.span)
    elements: list[Element] = []
    while parser.current.kind is not TokenKind.END_OF_INPUT:
        elements.append(parser.element(0, in_document=False))
    return Fragment(tuple(elements))
