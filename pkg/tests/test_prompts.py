import hashlib

import pytest

from tutorkit.dsl import parse_document, parse_fragment
from tutorkit.lint import lint_document, lint_fragment
from tutorkit.prompts import (
    EmptyDescription,
    FewShotExample,
    InvalidExample,
    Mode,
    NoErrorsToRepair,
    Role,
    build_component_prompt,
    build_interface_prompt,
    build_repair_prompt,
    load_examples,
    render_messages,
    serialize,
)

GOLDEN_INTERFACE_DESCRIPTION = (
    "A tutor for adding two proper fractions with unlike denominators, "
    "walking from common denominator to final sum."
)
GOLDEN_COMPONENT_DESCRIPTION = (
    "A row for entering the quotient and remainder of an integer division."
)

SECTION_HEADERS = (
    "# System Description",
    "# Format Explanation",
    "# Design Instructions",
    "# Examples",
    "# Task Instruction",
)


class TestBuilders:
    def test_interface_bundle_sections(self):
        bundle = build_interface_prompt("fraction addition tutor")
        assert bundle.mode is Mode.INTERFACE
        for section in (
            bundle.system_description,
            bundle.format_explanation,
            bundle.design_instructions,
            bundle.task_instruction,
        ):
            assert section.strip()
        assert bundle.examples

    def test_empty_description_rejected(self):
        with pytest.raises(EmptyDescription):
            build_interface_prompt("")
        with pytest.raises(EmptyDescription):
            build_component_prompt("   ")

    def test_component_bundle(self):
        bundle = build_component_prompt("a three-term equation row")
        assert bundle.mode is Mode.COMPONENT

    def test_document_example_rejected_in_component_mode(self):
        doc_example = FewShotExample("a whole tutor", "title[T] row { label[q] input[a] }")
        with pytest.raises(InvalidExample):
            build_component_prompt("anything", examples=[doc_example])

    def test_unparseable_example_rejected(self):
        bad = FewShotExample("broken", "row { input")
        with pytest.raises(InvalidExample):
            build_interface_prompt("anything", examples=[bad])

    def test_rule_breaking_example_rejected(self):
        bad = FewShotExample("adjacent inputs", "title[T] row { input[a] input[b] }")
        with pytest.raises(InvalidExample):
            build_interface_prompt("anything", examples=[bad])

    def test_determinism(self):
        first = render_messages(serialize(build_interface_prompt("same text")))
        second = render_messages(serialize(build_interface_prompt("same text")))
        assert first == second


class TestShippedExamples:
    def test_interface_examples_parse_and_lint_clean(self):
        examples = load_examples(Mode.INTERFACE)
        assert len(examples) == 3
        for example in examples:
            report = lint_document(parse_document(example.dsl))
            assert report.clean

    def test_component_examples_parse_and_lint_clean(self):
        examples = load_examples(Mode.COMPONENT)
        assert len(examples) == 3
        for example in examples:
            report = lint_fragment(parse_fragment(example.dsl))
            assert report.clean


class TestRepair:
    def _errors(self):
        try:
            parse_document("title[T] button{}")
        except Exception as exc:  # noqa: BLE001
            return [exc]
        raise AssertionError("expected a parse error")

    def test_repair_quotes_output_and_errors(self):
        bundle = build_repair_prompt("title[T] button{}", self._errors())
        assert bundle.mode is Mode.REPAIR
        assert "button" in bundle.task_instruction
        assert "E_UNKNOWN_ELEMENT" in bundle.task_instruction

    def test_no_errors_rejected(self):
        with pytest.raises(NoErrorsToRepair):
            build_repair_prompt("anything", [])

    def test_repair_determinism(self):
        errors = self._errors()
        a = render_messages(serialize(build_repair_prompt("x row {", errors)))
        b = render_messages(serialize(build_repair_prompt("x row {", errors)))
        assert a == b

    def test_component_target_mentions_fragment(self):
        bundle = build_repair_prompt("input input", self._errors(), target=Mode.COMPONENT)
        assert "fragment" in bundle.task_instruction


class TestSerialization:
    def test_two_messages_system_then_user(self):
        messages = serialize(build_interface_prompt("any tutor"))
        assert [m.role for m in messages] == [Role.SYSTEM, Role.USER]

    def test_sections_in_order_exactly_once(self):
        text = render_messages(serialize(build_interface_prompt("any tutor")))
        positions = [text.index(header) for header in SECTION_HEADERS]
        assert positions == sorted(positions)
        for header in SECTION_HEADERS:
            assert text.count(header) == 1

    def test_description_comes_last(self):
        text = render_messages(serialize(build_interface_prompt("THE-DESCRIPTION")))
        assert text.rstrip().endswith("THE-DESCRIPTION")

    def test_hash_stable_across_runs(self):
        digest = hashlib.sha256(
            render_messages(serialize(build_interface_prompt("pinned"))).encode()
        ).hexdigest()
        again = hashlib.sha256(
            render_messages(serialize(build_interface_prompt("pinned"))).encode()
        ).hexdigest()
        assert digest == again

    def test_interface_golden(self, golden_dir):
        text = render_messages(serialize(build_interface_prompt(GOLDEN_INTERFACE_DESCRIPTION)))
        assert text + "\n" == (golden_dir / "interface_prompt.txt").read_text("utf-8")

    def test_component_golden(self, golden_dir):
        text = render_messages(serialize(build_component_prompt(GOLDEN_COMPONENT_DESCRIPTION)))
        assert text + "\n" == (golden_dir / "component_prompt.txt").read_text("utf-8")
