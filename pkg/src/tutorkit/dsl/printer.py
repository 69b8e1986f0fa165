"""Canonical formatter for layouts and fragments.

One element per line, two-space indent per nesting level, values
re-escaped. The output reparses to a structurally identical AST, and
formatting is idempotent, so canonical text is a stable storage and
diff form.
"""

from __future__ import annotations

from .nodes import Column, Element, Fragment, Label, Row, TutorLayout


def escape_value(value: str) -> str:
    return value.replace("\\", "\\\\").replace("]", "\\]")


def _print_elements(elements: tuple[Element, ...], indent: int, lines: list[str]) -> None:
    pad = "  " * indent
    for element in elements:
        if isinstance(element, (Row, Column)):
            keyword = "row" if isinstance(element, Row) else "column"
            lines.append(f"{pad}{keyword} {{")
            _print_elements(element.children, indent + 1, lines)
            lines.append(f"{pad}}}")
        elif isinstance(element, Label):
            lines.append(f"{pad}label[{escape_value(element.value)}]")
        elif element.placeholder is None:
            lines.append(f"{pad}input")
        else:
            lines.append(f"{pad}input[{escape_value(element.placeholder)}]")


def pretty_print(node: TutorLayout | Fragment) -> str:
    lines: list[str] = []
    if isinstance(node, TutorLayout):
        lines.append(f"title[{escape_value(node.title)}]")
        _print_elements(node.body, 0, lines)
    else:
        _print_elements(node.elements, 0, lines)
    return "\n".join(lines)
