from tutorkit.dsl import Column, Fragment, Input, Label, Row, make_layout, parse_document
from tutorkit.lint import Severity, lint_document, lint_fragment


def rules(report):
    return [(f.rule, f.element_id) for f in report.findings]


class TestDocumentRules:
    def test_corpus_is_spotless(self, corpus_sources):
        for name, source in corpus_sources.items():
            report = lint_document(parse_document(source))
            assert report.findings == (), f"{name} has findings {rules(report)}"
            assert report.clean

    def test_l1_adjacent_inputs(self, fixtures_dir):
        source = (fixtures_dir / "lint/l1_adjacent_inputs.tut").read_text()
        report = lint_document(parse_document(source))
        assert rules(report) == [("L1", "in-2")]
        assert not report.clean

    def test_l1_spec_example(self):
        report = lint_document(parse_document("title[T] row { input input }"))
        assert ("L1", "in-2") in rules(report)

    def test_l2_loose_leaf(self, fixtures_dir):
        source = (fixtures_dir / "lint/l2_loose_leaf.tut").read_text()
        report = lint_document(parse_document(source))
        assert rules(report) == [("L2", "lbl-1")]

    def test_l2_and_l3_together(self):
        report = lint_document(parse_document("title[T] label[only text]"))
        assert {f.rule for f in report.findings} >= {"L2", "L3"}
        assert not report.clean

    def test_l3_no_inputs(self, fixtures_dir):
        source = (fixtures_dir / "lint/l3_no_inputs.tut").read_text()
        report = lint_document(parse_document(source))
        assert rules(report) == [("L3", None)]

    def test_l4_blank_title_is_warning(self):
        layout = make_layout("   ", (Row((Label("q"), Input("answer"))),))
        report = lint_document(layout)
        assert rules(report) == [("L4", "title")]
        assert report.clean  # warnings leave the report clean

    def test_l5_unlabeled_input(self, fixtures_dir):
        source = (fixtures_dir / "lint/l5_unlabeled_input.tut").read_text()
        report = lint_document(parse_document(source))
        assert rules(report) == [("L5", "in-1")]
        assert report.clean

    def test_l5_placeholder_suppresses(self):
        report = lint_document(parse_document("title[T] row { input[the answer] }"))
        assert rules(report) == []


class TestFragmentRules:
    def test_labelled_row_is_clean(self):
        report = lint_fragment(Fragment((Row((Label("x"), Input(None))),)))
        assert report.findings == ()

    def test_two_bare_inputs(self):
        report = lint_fragment(Fragment((Input(None), Input(None))))
        found = {f.rule for f in report.findings}
        assert {"L1", "L2"} <= found
        assert not report.clean

    def test_column_with_bare_input_warns_only(self):
        report = lint_fragment(Fragment((Column((Input(None),)),)))
        assert rules(report) == [("L5", "in-1")]
        assert report.clean

    def test_no_title_or_pathway_rules_for_fragments(self):
        # a fragment with zero inputs is fine: L3/L4 are document rules
        report = lint_fragment(Fragment((Row((Label("just text"),)),)))
        assert report.findings == ()


class TestMonotonicity:
    def test_inserting_label_removes_l1_and_adds_nothing(self):
        before = make_layout("T", (Row((Input("a"), Input("b"))),))
        after = make_layout("T", (Row((Input("a"), Label("then"), Input("b"))),))
        report_before = lint_document(before)
        report_after = lint_document(after)
        assert [f.rule for f in report_before.findings] == ["L1"]
        assert report_after.findings == ()


class TestReportShape:
    def test_lint_does_not_mutate(self):
        layout = parse_document("title[T] row { input input }")
        snapshot = (layout.title, layout.body, dict(layout.ids))
        lint_document(layout)
        assert (layout.title, layout.body, dict(layout.ids)) == snapshot

    def test_json_serialization(self):
        report = lint_document(parse_document("title[T] row { input input }"))
        data = report.to_json()
        assert data["clean"] is False
        finding = data["findings"][0]
        assert set(finding) == {"rule", "severity", "message", "element_id"}
        assert finding["severity"] in ("error", "warning")

    def test_clean_iff_no_errors(self):
        report = lint_document(parse_document("title[T] row { input }"))
        assert all(f.severity is Severity.WARNING for f in report.findings)
        assert report.clean
