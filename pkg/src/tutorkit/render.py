"""Deterministic HTML emission for layouts and fragments.

The template is frozen: fixed tags, class names, and two-space
indentation, so golden-file comparison is byte-exact. All user text
passes through a four-character escape map; values can never inject
markup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dsl import Column, Element, Fragment, Input, Label, Row, TutorLayout, assign_ids

_ESCAPES = (("&", "&amp;"), ("<", "&lt;"), (">", "&gt;"), ('"', "&quot;"))


def escape_html(value: str) -> str:
    for raw, escaped in _ESCAPES:
        value = value.replace(raw, escaped)
    return value


@dataclass(frozen=True)
class HtmlText:
    text: str
    element_index: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"html": self.text, "element_index": dict(self.element_index)}


_TAGS = {Row: "div", Column: "div", Label: "label", Input: "input"}


def _emit(
    elements: tuple[Element, ...],
    ids: dict[tuple[int, ...], str],
    prefix: tuple[int, ...],
    indent: int,
    lines: list[str],
    index: dict[str, str],
) -> None:
    pad = "  " * indent
    for i, element in enumerate(elements):
        path = prefix + (i,)
        element_id = ids[path]
        index[element_id] = _TAGS[type(element)]
        if isinstance(element, Row):
            lines.append(f'{pad}<div class="tutor-row" id="{element_id}">')
            _emit(element.children, ids, path, indent + 1, lines, index)
            lines.append(f"{pad}</div>")
        elif isinstance(element, Column):
            lines.append(f'{pad}<div class="tutor-column" id="{element_id}">')
            _emit(element.children, ids, path, indent + 1, lines, index)
            lines.append(f"{pad}</div>")
        elif isinstance(element, Label):
            lines.append(
                f'{pad}<label class="tutor-label" id="{element_id}">'
                f"{escape_html(element.value)}</label>"
            )
        else:
            placeholder = escape_html(element.placeholder or "")
            lines.append(
                f'{pad}<input class="tutor-input" id="{element_id}" '
                f'placeholder="{placeholder}">'
            )


def render_document(layout: TutorLayout) -> HtmlText:
    """Emit the full template: root div, title heading, then the body."""
    ids = layout.ids or assign_ids(layout.body)
    lines = ['<div class="tutor">']
    index: dict[str, str] = {"title": "h2"}
    lines.append(f'  <h2 class="tutor-title" id="title">{escape_html(layout.title)}</h2>')
    _emit(layout.body, ids, (), 1, lines, index)
    lines.append("</div>")
    return HtmlText(text="\n".join(lines), element_index=index)


def render_fragment(fragment: Fragment) -> HtmlText:
    """Emit fragment markup without the root div or title; ids are fragment-local."""
    ids = assign_ids(fragment.elements)
    lines: list[str] = []
    index: dict[str, str] = {}
    _emit(fragment.elements, ids, (), 0, lines, index)
    return HtmlText(text="\n".join(lines), element_index=index)
