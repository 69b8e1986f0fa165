import pytest
from fastapi.testclient import TestClient

from tutorkit.api import create_app
from tutorkit.components import ComponentStore
from tutorkit.dsl import ParseError, parse_document, parse_fragment, pretty_print
from tutorkit.gateway import GenerationRequest, ProviderConfig, ReplayProvider, generate
from tutorkit.lint import lint_document, lint_fragment
from tutorkit.prompts import (
    Mode,
    build_component_prompt,
    build_interface_prompt,
    serialize,
)
from tutorkit.render import render_document, render_fragment

CONFIG = ProviderConfig()

RENDER_CASES = [
    "title[T] input",
    "title[Quick Check] row { label[Answer:] input[your answer] }",
    "title[Nested] row { column { label[a] input[b] } }",
    "title[Empty Body]",
    "title[Escapes & More] row { label[a < b] input[c > d] }",
    'title[Quotes] row { label[say "hi"] input[reply] }',
    "title[Deep] row { row { row { label[x] input[y] } } }",
    "title[Placeholderless] row { label[q] input }",
    "title[Two Rows] row { label[a] input[1] } row { label[b] input[2] }",
    "title[Columns] column { label[a] input[1] } column { label[b] input[2] }",
]

FRAGMENT_CASES = [
    "input[x]",
    "row { label[x =] input[value] }",
    "column { label[work] input[step 1] }",
    "row { input[a] label[+] input[b] }",
    "label[just text]",
    "row { label[only a label] }",
    "column { row { label[nested] input[deep] } }",
    "input",
    "row { label[a] input } row { label[b] input }",
    "column { input[only] }",
]

INTERFACE_GENERATION_CASES = [
    (f"tutor number {i}", f"title[Tutor {i}] row {{ label[Question {i}:] input[answer] }}")
    for i in range(10)
]
COMPONENT_GENERATION_CASES = [
    (f"component number {i}", f"row {{ label[Part {i}:] input[value {i}] }}")
    for i in range(10)
]


@pytest.fixture()
def store(tmp_path):
    return ComponentStore(tmp_path / "store")


@pytest.fixture()
def replay():
    provider = ReplayProvider()
    for description, dsl in INTERFACE_GENERATION_CASES:
        provider.record(serialize(build_interface_prompt(description)), dsl)
    for description, dsl in COMPONENT_GENERATION_CASES:
        provider.record(serialize(build_component_prompt(description)), dsl)
    return provider


@pytest.fixture()
def client(store, replay):
    app = create_app(store, replay, CONFIG)
    return TestClient(app)


class TestHealth:
    def test_liveness(self, client):
        for _ in range(10):
            response = client.get("/api/health")
            assert response.status_code == 200
            assert response.json() == {"status": "ok"}


class TestRenderEndpoint:
    def test_contract_documents(self, client):
        for dsl in RENDER_CASES:
            response = client.post("/api/render", json={"dsl": dsl})
            assert response.status_code == 200
            expected = render_document(parse_document(dsl)).to_json()
            assert response.json() == expected

    def test_contract_fragments(self, client):
        for dsl in FRAGMENT_CASES:
            response = client.post("/api/render", json={"dsl": dsl, "mode": "component"})
            assert response.status_code == 200
            expected = render_fragment(parse_fragment(dsl)).to_json()
            assert response.json() == expected

    def test_basic_body_shape(self, client):
        response = client.post("/api/render", json={"dsl": "title[T] input"})
        assert 'id="in-1"' in response.json()["html"]

    def test_parse_error_maps_to_422(self, client):
        response = client.post("/api/render", json={"dsl": "button"})
        assert response.status_code == 422
        body = response.json()
        assert body["code"] in ("E_MISSING_TITLE", "E_UNKNOWN_ELEMENT")
        assert "span" in body

    def test_bad_mode_is_422(self, client):
        response = client.post("/api/render", json={"dsl": "input", "mode": "nonsense"})
        assert response.status_code == 422


class TestValidateEndpoint:
    def _expected(self, dsl, mode):
        try:
            if mode == "interface":
                ast = parse_document(dsl)
                report = lint_document(ast)
                from tutorkit.dsl import layout_to_json as ast_json
            else:
                ast = parse_fragment(dsl)
                report = lint_fragment(ast)
                from tutorkit.dsl import fragment_to_json as ast_json
        except ParseError as exc:
            return {"valid": False, "error": exc.to_json(), "lint": None, "ast": None,
                    "canonical": None}
        return {
            "valid": report.clean,
            "error": None,
            "lint": report.to_json(),
            "ast": ast_json(ast),
            "canonical": pretty_print(ast),
        }

    def test_contract_ten_cases(self, client):
        cases = [
            ("title[T] row { label[q] input[a] }", "interface"),
            ("title[T] row { input input }", "interface"),
            ("row { input }", "interface"),
            ("title[T] label[loose]", "interface"),
            ("", "interface"),
            ("row { label[x] input[y] }", "component"),
            ("input input", "component"),
            ("title[T] input", "component"),
            ("column { input }", "component"),
            ("row { label[ok] input[fine] }", "component"),
        ]
        for dsl, mode in cases:
            response = client.post("/api/validate", json={"dsl": dsl, "mode": mode})
            assert response.status_code == 200
            assert response.json() == self._expected(dsl, mode)


class TestGenerateEndpoints:
    def test_interface_contract(self, client, replay):
        for description, _ in INTERFACE_GENERATION_CASES:
            response = client.post(
                "/api/generate/interface", json={"description": description}
            )
            assert response.status_code == 200
            expected = generate(
                GenerationRequest(Mode.INTERFACE, description), replay, CONFIG
            ).to_json()
            assert response.json() == expected

    def test_component_contract(self, client, replay):
        for description, _ in COMPONENT_GENERATION_CASES:
            response = client.post(
                "/api/generate/component", json={"description": description}
            )
            assert response.status_code == 200
            expected = generate(
                GenerationRequest(Mode.COMPONENT, description), replay, CONFIG
            ).to_json()
            assert response.json() == expected

    def test_unknown_description_is_502_replay_miss(self, client):
        response = client.post(
            "/api/generate/interface", json={"description": "never recorded"}
        )
        assert response.status_code == 502
        assert response.json()["code"] == "ReplayMiss"

    def test_generation_failure_is_422(self, store):
        from tutorkit.gateway import ScriptedProvider

        app = create_app(store, ScriptedProvider(["junk", "junk", "junk"]), CONFIG)
        with TestClient(app) as client:
            response = client.post(
                "/api/generate/interface", json={"description": "anything"}
            )
        assert response.status_code == 422
        body = response.json()
        assert body["code"] == "GENERATION_FAILED"
        assert body["findings"]

    def test_empty_description_is_422(self, client):
        response = client.post("/api/generate/interface", json={"description": "  "})
        assert response.status_code == 422


class TestComponentEndpoints:
    CASES = [
        (f"part-{i}", f"row {{ label[Part {i}] input[value {i}] }}") for i in range(10)
    ]

    def test_create_contract(self, client, store):
        for name, dsl in self.CASES:
            response = client.post(
                "/api/components",
                json={"name": name, "description": "d", "dsl": dsl, "tags": ["t"]},
            )
            assert response.status_code == 201
            body = response.json()
            assert body == store.get(body["id"]).to_json()

    def test_list_contract(self, client, store):
        for name, dsl in self.CASES[:3]:
            client.post("/api/components", json={"name": name, "dsl": dsl})
        response = client.get("/api/components")
        assert response.status_code == 200
        assert response.json() == {"components": [r.to_json() for r in store.list()]}

    def test_list_tag_filter(self, client, store):
        client.post(
            "/api/components",
            json={"name": "tagged", "dsl": self.CASES[0][1], "tags": ["algebra"]},
        )
        client.post("/api/components", json={"name": "untagged", "dsl": self.CASES[1][1]})
        response = client.get("/api/components", params={"tag": "algebra"})
        assert response.json() == {
            "components": [r.to_json() for r in store.list(tag="algebra")]
        }

    def test_get_contract(self, client, store):
        created = client.post(
            "/api/components", json={"name": "one", "dsl": self.CASES[0][1]}
        ).json()
        response = client.get(f"/api/components/{created['id']}")
        assert response.status_code == 200
        assert response.json() == store.get(created["id"]).to_json()

    def test_delete(self, client):
        created = client.post(
            "/api/components", json={"name": "gone", "dsl": self.CASES[0][1]}
        ).json()
        response = client.delete(f"/api/components/{created['id']}")
        assert response.status_code == 200
        assert response.json() == {"acknowledged": True}
        assert client.get(f"/api/components/{created['id']}").status_code == 404

    def test_missing_is_404(self, client):
        assert client.get("/api/components/nope").status_code == 404
        assert client.delete("/api/components/nope").status_code == 404

    def test_duplicate_name_is_422(self, client):
        client.post("/api/components", json={"name": "dup", "dsl": self.CASES[0][1]})
        response = client.post(
            "/api/components", json={"name": "dup", "dsl": self.CASES[1][1]}
        )
        assert response.status_code == 422
        assert response.json()["code"] == "DuplicateName"

    def test_invalid_fragment_is_422(self, client):
        response = client.post(
            "/api/components", json={"name": "bad", "dsl": "title[T] input"}
        )
        assert response.status_code == 422
        assert response.json()["code"] == "InvalidFragment"


class TestErrorMapping:
    def test_malformed_json_is_400(self, client):
        response = client.post(
            "/api/render", content=b"{not json", headers={"Content-Type": "application/json"}
        )
        assert response.status_code == 400
        assert response.json()["code"] == "BAD_REQUEST"

    def test_missing_field_is_400(self, client):
        response = client.post("/api/render", json={"nope": 1})
        assert response.status_code == 400
