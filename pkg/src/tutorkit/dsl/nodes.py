"""AST node types for tutor layouts, plus id assignment and node counting.

Nodes are frozen; parsed values are shared freely. Element ids follow
document order, dense per kind: inputs ``in-1..``, labels ``lbl-1..``,
rows ``row-1..``, columns ``col-1..``. A path is the tuple of child
indices from the document body (or fragment root) down to the element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

Path = tuple[int, ...]


@dataclass(frozen=True)
class Row:
    children: tuple["Element", ...] = ()


@dataclass(frozen=True)
class Column:
    children: tuple["Element", ...] = ()


@dataclass(frozen=True)
class Label:
    value: str


@dataclass(frozen=True)
class Input:
    placeholder: str | None = None


Element = Union[Row, Column, Label, Input]

_ID_PREFIX = {Row: "row", Column: "col", Label: "lbl", Input: "in"}


def walk(elements: tuple[Element, ...], prefix: Path = ()) -> Iterator[tuple[Path, Element]]:
    """Pre-order traversal yielding (path, element) pairs."""
    for index, element in enumerate(elements):
        path = prefix + (index,)
        yield path, element
        if isinstance(element, (Row, Column)):
            yield from walk(element.children, path)


def assign_ids(elements: tuple[Element, ...]) -> dict[Path, str]:
    counters = {"row": 0, "col": 0, "lbl": 0, "in": 0}
    ids: dict[Path, str] = {}
    for path, element in walk(elements):
        prefix = _ID_PREFIX[type(element)]
        counters[prefix] += 1
        ids[path] = f"{prefix}-{counters[prefix]}"
    return ids


@dataclass(frozen=True)
class TutorLayout:
    title: str
    body: tuple[Element, ...]
    ids: dict[Path, str] = field(default_factory=dict)


def make_layout(title: str, body: tuple[Element, ...] | list[Element]) -> TutorLayout:
    """Build a TutorLayout with ids assigned in document order."""
    body = tuple(body)
    return TutorLayout(title=title, body=body, ids=assign_ids(body))


@dataclass(frozen=True)
class Fragment:
    elements: tuple[Element, ...]


def _body_of(node: TutorLayout | Fragment) -> tuple[Element, ...]:
    return node.body if isinstance(node, TutorLayout) else node.elements


def count_nodes(node: TutorLayout | Fragment) -> dict[str, int]:
    """Counts per element kind plus the deepest container nesting level."""

    def depth_of(elements: tuple[Element, ...]) -> int:
        deepest = 0
        for element in elements:
            if isinstance(element, (Row, Column)):
                deepest = max(deepest, 1 + depth_of(element.children))
        return deepest

    counts = {"inputs": 0, "labels": 0, "rows": 0, "columns": 0}
    for _, element in walk(_body_of(node)):
        if isinstance(element, Input):
            counts["inputs"] += 1
        elif isinstance(element, Label):
            counts["labels"] += 1
        elif isinstance(element, Row):
            counts["rows"] += 1
        else:
            counts["columns"] += 1
    counts["depth"] = depth_of(_body_of(node))
    return counts


def element_to_json(element: Element) -> dict:
    if isinstance(element, Row):
        return {"kind": "row", "children": [element_to_json(c) for c in element.children]}
    if isinstance(element, Column):
        return {"kind": "column", "children": [element_to_json(c) for c in element.children]}
    if isinstance(element, Label):
        return {"kind": "label", "value": element.value}
    return {"kind": "input", "placeholder": element.placeholder}


def element_from_json(data: dict) -> Element:
    kind = data.get("kind")
    if kind == "row":
        return Row(tuple(element_from_json(c) for c in data.get("children", [])))
    if kind == "column":
        return Column(tuple(element_from_json(c) for c in data.get("children", [])))
    if kind == "label":
        return Label(data["value"])
    if kind == "input":
        return Input(data.get("placeholder"))
    raise ValueError(f"unknown element kind {kind!r}")


def layout_to_json(layout: TutorLayout) -> dict:
    return {"title": layout.title, "body": [element_to_json(e) for e in layout.body]}


def fragment_to_json(fragment: Fragment) -> dict:
    return {"elements": [element_to_json(e) for e in fragment.elements]}
