import pytest

from tutorkit.dsl import (
    Column,
    Fragment,
    Input,
    Label,
    ParseError,
    Row,
    count_nodes,
    parse_document,
    parse_fragment,
)
from tutorkit.dsl.errors import (
    E_DEPTH_EXCEEDED,
    E_DUPLICATE_TITLE,
    E_EMPTY_DOCUMENT,
    E_MISSING_TITLE,
    E_UNEXPECTED_TOKEN,
    E_UNKNOWN_ELEMENT,
)


def err(func, source):
    with pytest.raises(ParseError) as exc:
        func(source)
    return exc.value


class TestParseDocument:
    def test_basic_document(self):
        layout = parse_document("title[T] row { label[Step 1:] input[answer] }")
        assert layout.title == "T"
        assert layout.body == (Row((Label("Step 1:"), Input("answer"))),)
        assert set(layout.ids.values()) == {"row-1", "lbl-1", "in-1"}

    def test_missing_title(self):
        assert err(parse_document, "row { input }").code == E_MISSING_TITLE

    def test_unknown_element_with_span(self):
        error = err(parse_document, "title[T] button { }")
        assert error.code == E_UNKNOWN_ELEMENT
        assert (error.span.start, error.span.end) == (9, 15)

    def test_duplicate_title(self):
        assert err(parse_document, "title[T] title[U]").code == E_DUPLICATE_TITLE

    def test_duplicate_title_inside_container(self):
        assert err(parse_document, "title[T] row { title[U] }").code == E_DUPLICATE_TITLE

    def test_empty_document(self):
        assert err(parse_document, "   \n  ").code == E_EMPTY_DOCUMENT

    def test_blank_title_rejected(self):
        assert err(parse_document, "title[   ] input").code == E_MISSING_TITLE
        assert err(parse_document, "title[] input").code == E_MISSING_TITLE

    def test_blank_label_rejected(self):
        assert err(parse_document, "title[T] row { label[  ] }").code == E_UNEXPECTED_TOKEN

    def test_unclosed_container(self):
        assert err(parse_document, "title[T] row { input").code == E_UNEXPECTED_TOKEN

    def test_stray_closing_brace(self):
        assert err(parse_document, "title[T] }").code == E_UNEXPECTED_TOKEN

    def test_depth_eight_allowed(self):
        nested = "title[T] " + "row { " * 8 + "input[x]" + " }" * 8
        layout = parse_document(nested)
        assert count_nodes(layout)["depth"] == 8

    def test_depth_nine_rejected(self):
        nested = "title[T] " + "row { " * 9 + "input[x]" + " }" * 9
        assert err(parse_document, nested).code == E_DEPTH_EXCEEDED

    def test_input_placeholder_forms(self):
        layout = parse_document("title[T] row { label[q] input } row { label[q] input[] } "
                                "row { label[q] input[hint] }")
        inputs = [layout.body[i].children[1] for i in range(3)]
        assert inputs == [Input(None), Input(""), Input("hint")]

    def test_error_spans_inside_source(self):
        bad_sources = [
            "row { input }",
            "title[T] button { }",
            "",
            "title[T] title[U]",
            "title[T] row { label[x] ",
            "title[T] label[oops",
        ]
        for source in bad_sources:
            error = err(parse_document, source)
            assert 0 <= error.span.start <= error.span.end <= len(source)


class TestParseFragment:
    def test_column_fragment(self):
        fragment = parse_fragment("column { label[x =] input }")
        assert fragment == Fragment((Column((Label("x ="), Input(None))),))

    def test_title_in_fragment_rejected(self):
        error = err(parse_fragment, "title[T] input")
        assert error.code == E_UNEXPECTED_TOKEN
        assert (error.span.start, error.span.end) == (0, 5)

    def test_empty_fragment(self):
        assert err(parse_fragment, "   ").code == E_EMPTY_DOCUMENT

    def test_multiple_top_level_elements(self):
        fragment = parse_fragment("row { label[a] input } row { label[b] input }")
        assert len(fragment.elements) == 2


class TestIds:
    def test_dense_document_order(self):
        layout = parse_document(
            "title[T] row { input label[a] } column { input label[b] } row { input }"
        )
        by_path = sorted(layout.ids.items())
        assert [i for _, i in by_path] == ["row-1", "in-1", "lbl-1", "col-1", "in-2", "lbl-2",
                                           "row-2", "in-3"]

    def test_determinism(self):
        source = "title[T] row { label[a] input } column { input[p] }"
        assert parse_document(source).ids == parse_document(source).ids

    def test_every_element_covered_once(self):
        layout = parse_document("title[T] row { column { label[a] input } input[x] }")
        counts = count_nodes(layout)
        total = counts["inputs"] + counts["labels"] + counts["rows"] + counts["columns"]
        assert len(layout.ids) == total
        assert len(set(layout.ids.values())) == total


class TestCountNodes:
    def test_empty_body(self):
        from tutorkit.dsl import make_layout

        counts = count_nodes(make_layout("T", ()))
        assert counts == {"inputs": 0, "labels": 0, "rows": 0, "columns": 0, "depth": 0}

    def test_simple_fixture_against_walk_oracle(self, corpus_sources):
        layout = parse_document(corpus_sources["simple_sequential"])
        assert count_nodes(layout) == _oracle_counts(layout.body)
        assert count_nodes(layout) == {
            "inputs": 2,
            "labels": 2,
            "rows": 2,
            "columns": 0,
            "depth": 1,
        }

    def test_nested_depth(self):
        layout = parse_document("title[T] row { column { input } }")
        assert count_nodes(layout)["depth"] == 2

    def test_corpus_against_walk_oracle(self, corpus_sources):
        for source in corpus_sources.values():
            layout = parse_document(source)
            assert count_nodes(layout) == _oracle_counts(layout.body)


def _oracle_counts(elements):
    """Independent recursive walk, kept separate from the implementation."""
    totals = {"inputs": 0, "labels": 0, "rows": 0, "columns": 0, "depth": 0}

    def visit(element, depth):
        if isinstance(element, Input):
            totals["inputs"] += 1
        elif isinstance(element, Label):
            totals["labels"] += 1
        else:
            key = "rows" if isinstance(element, Row) else "columns"
            totals[key] += 1
            totals["depth"] = max(totals["depth"], depth + 1)
            for child in element.children:
                visit(child, depth + 1)

    for element in elements:
        visit(element, 0)
    return totals
