"""HTTP surface over the authoring pipeline.

Every endpoint is a thin adapter: it parses the request body, calls the
corresponding module function, and returns that function's JSON form
untouched. Error mapping is uniform — malformed JSON 400, domain errors
422, missing resources 404, provider transport failures 502.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import components as component_store
from .dsl import (
    Fragment,
    ParseError,
    TutorLayout,
    fragment_to_json,
    layout_to_json,
    parse_document,
    parse_fragment,
    pretty_print,
)
from .gateway import (
    GenerationFailure,
    GenerationRequest,
    HttpProvider,
    Provider,
    ProviderConfig,
    ProviderError,
    ReplayProvider,
    ScriptedProvider,
    generate,
)
from .lint import lint_document, lint_fragment
from .prompts import Mode
from .render import render_document, render_fragment


class BadConfig(Exception):
    pass


@dataclass
class AppConfig:
    host: str = "127.0.0.1"
    port: int = 8300
    store_path: str = "components"
    provider_kind: str = "http"  # http | replay | scripted
    replay_file: str | None = None
    script_file: str | None = None
    provider: ProviderConfig = field(default_factory=ProviderConfig)

    @classmethod
    def from_file(cls, path: str | Path) -> "AppConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise BadConfig(f"cannot read config {path}: {exc}") from exc
        provider = ProviderConfig(**data.pop("provider", {}))
        try:
            return cls(provider=provider, **data)
        except TypeError as exc:
            raise BadConfig(f"unknown config key: {exc}") from exc


def build_provider(config: AppConfig) -> Provider:
    if config.provider_kind == "http":
        return HttpProvider()
    if config.provider_kind == "replay":
        if not config.replay_file:
            raise BadConfig("replay provider needs replay_file")
        return ReplayProvider.from_file(config.replay_file)
    if config.provider_kind == "scripted":
        if not config.script_file:
            raise BadConfig("scripted provider needs script_file")
        responses = json.loads(Path(config.script_file).read_text(encoding="utf-8"))
        if not isinstance(responses, list):
            raise BadConfig("script_file must hold a JSON array of responses")
        return ScriptedProvider(responses)
    raise BadConfig(f"unknown provider kind {config.provider_kind!r}")


class RenderBody(BaseModel):
    dsl: str
    mode: str = "interface"


class ValidateBody(BaseModel):
    dsl: str
    mode: str = "interface"


class GenerateBody(BaseModel):
    description: str
    max_repairs: int = 2


class ComponentBody(BaseModel):
    name: str
    description: str = ""
    dsl: str
    tags: list[str] = []


def _error_body(
    code: str, message: str, span=None, findings=None
) -> dict:
    body: dict = {"code": code, "message": message}
    if span is not None:
        body["span"] = {"start": span.start, "end": span.end}
    if findings is not None:
        body["findings"] = findings
    return body


def _domain_error(code: str, message: str, span=None, findings=None) -> JSONResponse:
    return JSONResponse(status_code=422, content=_error_body(code, message, span, findings))


def _parse_mode(mode: str) -> Mode:
    if mode == "interface":
        return Mode.INTERFACE
    if mode == "component":
        return Mode.COMPONENT
    raise ValueError(f"mode must be 'interface' or 'component', not {mode!r}")


def create_app(
    store: component_store.ComponentStore,
    provider: Provider,
    provider_config: ProviderConfig | None = None,
) -> FastAPI:
    config = provider_config or ProviderConfig()
    app = FastAPI(title="tutorkit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content=_error_body("BAD_REQUEST", "request body is malformed"),
        )

    @app.exception_handler(ParseError)
    async def parse_error(request: Request, exc: ParseError):
        return _domain_error(exc.code, exc.message, span=exc.span)

    @app.exception_handler(ProviderError)
    async def provider_error(request: Request, exc: ProviderError):
        return JSONResponse(
            status_code=502,
            content=_error_body(type(exc).__name__, str(exc)),
        )

    @app.exception_handler(component_store.NotFound)
    async def not_found(request: Request, exc: component_store.NotFound):
        return JSONResponse(status_code=404, content=_error_body("NotFound", str(exc)))

    @app.exception_handler(component_store.DuplicateName)
    async def duplicate_name(request: Request, exc: component_store.DuplicateName):
        return _domain_error("DuplicateName", str(exc))

    @app.exception_handler(component_store.InvalidFragment)
    async def invalid_fragment(request: Request, exc: component_store.InvalidFragment):
        return _domain_error("InvalidFragment", str(exc))

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        return _domain_error("INVALID_ARGUMENT", str(exc))

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/render")
    def render(body: RenderBody):
        if _parse_mode(body.mode) is Mode.INTERFACE:
            return render_document(parse_document(body.dsl)).to_json()
        return render_fragment(parse_fragment(body.dsl)).to_json()

    @app.post("/api/validate")
    def validate(body: ValidateBody):
        mode = _parse_mode(body.mode)
        try:
            if mode is Mode.INTERFACE:
                ast: TutorLayout | Fragment = parse_document(body.dsl)
                report = lint_document(ast)
                ast_json = layout_to_json(ast)
            else:
                ast = parse_fragment(body.dsl)
                report = lint_fragment(ast)
                ast_json = fragment_to_json(ast)
        except ParseError as exc:
            return {"valid": False, "error": exc.to_json(), "lint": None, "ast": None,
                    "canonical": None}
        return {
            "valid": report.clean,
            "error": None,
            "lint": report.to_json(),
            "ast": ast_json,
            "canonical": pretty_print(ast),
        }

    def _run_generation(mode: Mode, body: GenerateBody):
        request = GenerationRequest(
            mode=mode, description=body.description, max_repairs=body.max_repairs
        )
        try:
            result = generate(request, provider, config)
        except GenerationFailure as exc:
            return _domain_error(
                "GENERATION_FAILED",
                str(exc),
                findings=[e.to_json() for e in exc.last_errors],
            )
        return result.to_json()

    @app.post("/api/generate/interface")
    def generate_interface(body: GenerateBody):
        return _run_generation(Mode.INTERFACE, body)

    @app.post("/api/generate/component")
    def generate_component(body: GenerateBody):
        return _run_generation(Mode.COMPONENT, body)

    @app.get("/api/components")
    def list_components(tag: str | None = None):
        return {"components": [r.to_json() for r in store.list(tag)]}

    @app.post("/api/components", status_code=201)
    def create_component(body: ComponentBody):
        record = store.create(
            name=body.name, description=body.description, dsl=body.dsl, tags=tuple(body.tags)
        )
        return record.to_json()

    @app.get("/api/components/{record_id}")
    def get_component(record_id: str):
        return store.get(record_id).to_json()

    @app.delete("/api/components/{record_id}")
    def delete_component(record_id: str):
        store.delete(record_id)
        return {"acknowledged": True}

    return app


def serve(config: AppConfig) -> None:
    """Run the service until interrupted; raises BadConfig before binding."""
    import uvicorn

    store = component_store.ComponentStore(config.store_path)
    provider = build_provider(config)
    app = create_app(store, provider, config.provider)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
