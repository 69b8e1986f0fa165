"""Tokenizer for the layout DSL.

Whitespace between tokens is insignificant and never produces a token.
Bracketed values support two escapes, ``\\]`` and ``\\\\``; a value may
not span lines. Unknown bare words are lexed as WORD tokens so the
parser can reject them with a precise span instead of the lexer failing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import E_UNTERMINATED_VALUE, ParseError, Span


class TokenKind(enum.Enum):
    KEYWORD_TITLE = "title"
    KEYWORD_ROW = "row"
    KEYWORD_COLUMN = "column"
    KEYWORD_LABEL = "label"
    KEYWORD_INPUT = "input"
    LBRACKET = "["
    RBRACKET = "]"
    LBRACE = "{"
    RBRACE = "}"
    TEXT = "text"
    WORD = "word"
    END_OF_INPUT = "end of input"


KEYWORDS = {
    "title": TokenKind.KEYWORD_TITLE,
    "row": TokenKind.KEYWORD_ROW,
    "column": TokenKind.KEYWORD_COLUMN,
    "label": TokenKind.KEYWORD_LABEL,
    "input": TokenKind.KEYWORD_INPUT,
}

_DELIMITERS = {
    "[": TokenKind.LBRACKET,
    "]": TokenKind.RBRACKET,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    span: Span
    text: str = ""

    def describe(self) -> str:
        if self.kind in (TokenKind.TEXT, TokenKind.WORD):
            return f"{self.kind.value} {self.text!r}"
        return f"'{self.kind.value}'" if self.kind != TokenKind.END_OF_INPUT else self.kind.value


def _unescape(raw: str) -> str:
    out = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch == "\\" and i + 1 < len(raw) and raw[i + 1] in ("]", "\\"):
            out.append(raw[i + 1])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def tokenize(source: str) -> list[Token]:
    """Lex ``source`` into tokens ending with END_OF_INPUT.

    Raises ParseError(E_UNTERMINATED_VALUE) when a ``[`` has no matching
    unescaped ``]`` before a newline or the end of input.
    """
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _DELIMITERS:
            kind = _DELIMITERS[ch]
            tokens.append(Token(kind, Span(i, i + 1)))
            i += 1
            if kind is not TokenKind.LBRACKET:
                continue
            # Value scan: everything up to the next unescaped ']' on this line.
            start = i
            while i < n and source[i] != "\n":
                if source[i] == "\\" and i + 1 < n and source[i + 1] in ("]", "\\"):
                    i += 2
                    continue
                if source[i] == "]":
                    break
                i += 1
            if i >= n or source[i] != "]":
                raise ParseError(
                    E_UNTERMINATED_VALUE,
                    "value opened with '[' has no closing ']' on the same line",
                    Span(start - 1, i),
                )
            if i > start:
                tokens.append(Token(TokenKind.TEXT, Span(start, i), _unescape(source[start:i])))
            tokens.append(Token(TokenKind.RBRACKET, Span(i, i + 1)))
            i += 1
            continue
        # Bare word: maximal run of non-space, non-delimiter characters.
        start = i
        while i < n and not source[i].isspace() and source[i] not in _DELIMITERS:
            i += 1
        word = source[start:i]
        kind = KEYWORDS.get(word, TokenKind.WORD)
        tokens.append(Token(kind, Span(start, i), word if kind is TokenKind.WORD else ""))
    tokens.append(Token(TokenKind.END_OF_INPUT, Span(n, n)))
    return tokens
