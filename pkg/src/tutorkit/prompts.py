"""Five-section prompt assembly for interface, component, and repair requests.

Section texts are data, shipped as plain-text assets under
``prompt/<mode>/<section>.txt`` and loaded at import of the builder
functions; wording changes never touch code. Serialization is pure
string assembly, so equal bundles always produce identical messages.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .dsl import Fragment, ParseError, TutorLayout, parse_document, parse_fragment
from .lint import Finding, lint_document, lint_fragment

SECTION_NAMES = (
    "system_description",
    "format_explanation",
    "design_instructions",
    "task_instruction",
)


class Mode(enum.Enum):
    INTERFACE = "interface"
    COMPONENT = "component"
    REPAIR = "repair"


class Role(enum.Enum):
    SYSTEM = "system"
    USER = "user"
    ASSISTANT = "assistant"


class EmptyDescription(ValueError):
    pass


class NoErrorsToRepair(ValueError):
    pass


class InvalidExample(ValueError):
    pass


@dataclass(frozen=True)
class FewShotExample:
    description: str
    dsl: str


@dataclass(frozen=True)
class Message:
    role: Role
    content: str

    def to_json(self) -> dict:
        return {"role": self.role.value, "content": self.content}


MessageList = list[Message]


def _validate_example(example: FewShotExample, mode: Mode) -> None:
    try:
        if mode is Mode.INTERFACE:
            node: TutorLayout | Fragment = parse_document(example.dsl)
            report = lint_document(node)
        else:
            node = parse_fragment(example.dsl)
            report = lint_fragment(node)
    except ParseError as exc:
        raise InvalidExample(
            f"example {example.description[:40]!r} does not parse: {exc.message}"
        ) from exc
    if not report.clean:
        rules = ", ".join(f.rule for f in report.errors())
        raise InvalidExample(
            f"example {example.description[:40]!r} fails design rules: {rules}"
        )


@dataclass(frozen=True)
class PromptBundle:
    mode: Mode
    system_description: str
    format_explanation: str
    design_instructions: str
    task_instruction: str
    examples: tuple[FewShotExample, ...]
    description: str = ""

    def __post_init__(self) -> None:
        for name in SECTION_NAMES:
            if not getattr(self, name).strip():
                raise ValueError(f"prompt section {name!r} is empty")
        if self.mode is not Mode.REPAIR:
            if not self.examples:
                raise InvalidExample(f"{self.mode.value} bundles need at least one example")
            example_mode = Mode.INTERFACE if self.mode is Mode.INTERFACE else Mode.COMPONENT
            for example in self.examples:
                _validate_example(example, example_mode)


def _asset_root():
    return resources.files("tutorkit") / "prompt"


def load_section(mode: Mode, section: str) -> str:
    path = _asset_root() / mode.value / f"{section}.txt"
    return path.read_text(encoding="utf-8").rstrip("\n")


def load_examples(mode: Mode) -> tuple[FewShotExample, ...]:
    """Shipped few-shot pairs: NN_name.desc.txt beside NN_name.tut."""
    directory = _asset_root() / mode.value / "examples"
    pairs = []
    names = sorted(entry.name for entry in directory.iterdir() if entry.name.endswith(".desc.txt"))
    for name in names:
        stem = name[: -len(".desc.txt")]
        description = (directory / name).read_text(encoding="utf-8").strip()
        dsl = (directory / f"{stem}.tut").read_text(encoding="utf-8").strip()
        pairs.append(FewShotExample(description=description, dsl=dsl))
    return tuple(pairs)


def build_interface_prompt(
    description: str, examples: Sequence[FewShotExample] | None = None
) -> PromptBundle:
    """Bundle for generating a complete tutor document from a description."""
    if not description.strip():
        raise EmptyDescription("interface description is empty")
    return PromptBundle(
        mode=Mode.INTERFACE,
        system_description=load_section(Mode.INTERFACE, "system_description"),
        format_explanation=load_section(Mode.INTERFACE, "format_explanation"),
        design_instructions=load_section(Mode.INTERFACE, "design_instructions"),
        task_instruction=load_section(Mode.INTERFACE, "task_instruction"),
        examples=tuple(examples) if examples is not None else load_examples(Mode.INTERFACE),
        description=description,
    )


def build_component_prompt(
    description: str, examples: Sequence[FewShotExample] | None = None
) -> PromptBundle:
    """Bundle for generating a reusable titleless fragment."""
    if not description.strip():
        raise EmptyDescription("component description is empty")
    return PromptBundle(
        mode=Mode.COMPONENT,
        system_description=load_section(Mode.COMPONENT, "system_description"),
        format_explanation=load_section(Mode.COMPONENT, "format_explanation"),
        design_instructions=load_section(Mode.COMPONENT, "design_instructions"),
        task_instruction=load_section(Mode.COMPONENT, "task_instruction"),
        examples=tuple(examples) if examples is not None else load_examples(Mode.COMPONENT),
        description=description,
    )


def describe_error(error: ParseError | Finding) -> str:
    if isinstance(error, ParseError):
        return f"{error.code} at offsets {error.span.start}..{error.span.end}: {error.message}"
    where = f" on {error.element_id}" if error.element_id else ""
    return f"{error.rule} ({error.severity.value}){where}: {error.message}"


def build_repair_prompt(
    previous_output: str,
    errors: Sequence[ParseError | Finding],
    target: Mode = Mode.INTERFACE,
) -> PromptBundle:
    """Bundle that quotes the rejected output and every diagnostic.

    ``target`` names the grammar to regenerate in (interface document or
    component fragment); the repair itself is always mode REPAIR.
    """
    if not errors:
        raise NoErrorsToRepair("repair prompt needs at least one error")
    if target is Mode.REPAIR:
        raise ValueError("target must be INTERFACE or COMPONENT")
    target_text = (
        "a complete tutor document, title first"
        if target is Mode.INTERFACE
        else "a reusable component fragment with no title"
    )
    error_lines = "\n".join(f"- {describe_error(e)}" for e in errors)
    task = (
        load_section(Mode.REPAIR, "task_instruction")
        .replace("<<PREVIOUS_OUTPUT>>", previous_output)
        .replace("<<ERRORS>>", error_lines)
        .replace("<<TARGET>>", target_text)
    )
    return PromptBundle(
        mode=Mode.REPAIR,
        system_description=load_section(Mode.REPAIR, "system_description"),
        format_explanation=load_section(Mode.REPAIR, "format_explanation"),
        design_instructions=load_section(Mode.REPAIR, "design_instructions"),
        task_instruction=task,
        examples=(),
        description="",
    )


def serialize(bundle: PromptBundle) -> MessageList:
    """Two messages: system (three framing sections), user (examples, task, description)."""
    system = (
        f"# System Description\n{bundle.system_description}\n\n"
        f"# Format Explanation\n{bundle.format_explanation}\n\n"
        f"# Design Instructions\n{bundle.design_instructions}"
    )
    example_blocks = [
        f"Example {i}: {example.description}\n{example.dsl}"
        for i, example in enumerate(bundle.examples, start=1)
    ]
    examples_text = "\n\n".join(example_blocks) if example_blocks else "(none)"
    user = f"# Examples\n{examples_text}\n\n# Task Instruction\n{bundle.task_instruction}"
    if bundle.description:
        user += f"\n\n{bundle.description}"
    return [Message(Role.SYSTEM, system), Message(Role.USER, user)]


def render_messages(messages: MessageList) -> str:
    """Deterministic flat text of a message list, for hashing and goldens."""
    return "\n\n".join(f"[{m.role.value}]\n{m.content}" for m in messages)
