"""Design rules for tutor layouts, checked on the AST.

Errors encode the layout principles that generation must honor and
drive the repair loop; warnings only inform the educator.

    L1 (error)   two sibling inputs with no label between them
    L2 (error)   label or input at the top level, outside any row/column
    L3 (error)   document has no input at all, so no step to solve
    L4 (warning) blank document title
    L5 (warning) input with neither a placeholder nor a label sibling

Documents are checked against all five rules; fragments against
L1, L2, and L5 only (they carry no title and no full pathway).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dsl import Column, Element, Fragment, Input, Label, Path, Row, TutorLayout, assign_ids


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    rule: str
    severity: Severity
    message: str
    element_id: str | None = None

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "severity": self.severity.value,
            "message": self.message,
            "element_id": self.element_id,
        }


@dataclass(frozen=True)
class LintReport:
    findings: tuple[Finding, ...]

    @property
    def clean(self) -> bool:
        return not any(f.severity is Severity.ERROR for f in self.findings)

    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.ERROR)

    def to_json(self) -> dict:
        return {"findings": [f.to_json() for f in self.findings], "clean": self.clean}


def _check_siblings(
    elements: tuple[Element, ...],
    ids: dict[Path, str],
    prefix: Path,
    top_level: bool,
    findings: list[Finding],
) -> None:
    has_label_sibling = any(isinstance(e, Label) for e in elements)
    label_seen_since_input = False
    input_open = False
    for index, element in enumerate(elements):
        path = prefix + (index,)
        if isinstance(element, Label):
            label_seen_since_input = True
        elif isinstance(element, Input):
            if input_open and not label_seen_since_input:
                findings.append(
                    Finding(
                        rule="L1",
                        severity=Severity.ERROR,
                        message="input follows another input with no label between them",
                        element_id=ids[path],
                    )
                )
            input_open = True
            label_seen_since_input = False
        if top_level and isinstance(element, (Label, Input)):
            findings.append(
                Finding(
                    rule="L2",
                    severity=Severity.ERROR,
                    message="label and input elements must sit inside a row or column",
                    element_id=ids[path],
                )
            )
        if isinstance(element, Input) and not (element.placeholder or "").strip():
            if not has_label_sibling:
                findings.append(
                    Finding(
                        rule="L5",
                        severity=Severity.WARNING,
                        message="input has no placeholder and no label beside it",
                        element_id=ids[path],
                    )
                )
        if isinstance(element, (Row, Column)):
            _check_siblings(element.children, ids, path, False, findings)


def _input_count(elements: tuple[Element, ...]) -> int:
    total = 0
    for element in elements:
        if isinstance(element, Input):
            total += 1
        elif isinstance(element, (Row, Column)):
            total += _input_count(element.children)
    return total


def lint_document(layout: TutorLayout) -> LintReport:
    findings: list[Finding] = []
    ids = layout.ids or assign_ids(layout.body)
    _check_siblings(layout.body, ids, (), True, findings)
    if _input_count(layout.body) == 0:
        findings.append(
            Finding(
                rule="L3",
                severity=Severity.ERROR,
                message="layout has no input, so the student has nowhere to answer",
            )
        )
    if not layout.title.strip():
        findings.append(
            Finding(
                rule="L4",
                severity=Severity.WARNING,
                message="title is blank; state the problem clearly",
                element_id="title",
            )
        )
    return LintReport(tuple(findings))


def lint_fragment(fragment: Fragment) -> LintReport:
    findings: list[Finding] = []
    ids = assign_ids(fragment.elements)
    _check_siblings(fragment.elements, ids, (), True, findings)
    return LintReport(tuple(findings))
