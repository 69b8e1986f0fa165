"""Provider abstraction and the generate -> parse -> lint -> repair pipeline.

Three providers satisfy the same contract: an HTTP chat-completions
client, a replay provider keyed by a hash of the serialized messages,
and a scripted provider that returns a fixed response sequence. The
replay and scripted providers make the whole pipeline byte-deterministic
offline, which is how the test suite runs.

Transport failures surface immediately and never consume repair
attempts; only output the model actually produced is repair-worthy.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol, Sequence

import httpx

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
from .lint import Finding, LintReport, lint_document, lint_fragment
from .prompts import (
    MessageList,
    Mode,
    build_component_prompt,
    build_interface_prompt,
    build_repair_prompt,
    render_messages,
    serialize,
)
from .render import HtmlText, render_document, render_fragment


class ProviderError(Exception):
    """Base for transport-level failures."""


class Timeout(ProviderError):
    pass


class AuthFailure(ProviderError):
    pass


class MalformedProviderResponse(ProviderError):
    pass


class ReplayMiss(MalformedProviderResponse):
    pass


class ScriptExhausted(MalformedProviderResponse):
    pass


class EmptyExtraction(ValueError):
    pass


@dataclass(frozen=True)
class ProviderConfig:
    endpoint: str = "https://api.openai.com/v1/chat/completions"
    model: str = "gpt-4"
    credential_env: str = "TUTORKIT_API_KEY"
    temperature: float = 0.2
    max_tokens: int = 1024
    timeout_seconds: float = 60.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError("temperature must be within [0, 2]")
        if self.timeout_seconds <= 0:
            raise ValueError("timeout must be positive")
        if self.max_tokens <= 0:
            raise ValueError("max_tokens must be positive")


class Provider(Protocol):
    def complete(self, messages: MessageList, config: ProviderConfig) -> str: ...


class HttpProvider:
    """Chat-completions JSON client; credential comes from the environment.

    ``transport`` is an httpx transport override so tests can exercise the
    wire format without a network.
    """

    def __init__(self, transport: httpx.BaseTransport | None = None):
        self._transport = transport

    def complete(self, messages: MessageList, config: ProviderConfig) -> str:
        credential = os.environ.get(config.credential_env)
        if not credential:
            raise AuthFailure(f"environment variable {config.credential_env} is not set")
        payload = {
            "model": config.model,
            "messages": [m.to_json() for m in messages],
            "temperature": config.temperature,
            "max_tokens": config.max_tokens,
        }
        try:
            with httpx.Client(
                transport=self._transport, timeout=config.timeout_seconds
            ) as client:
                response = client.post(
                    config.endpoint,
                    json=payload,
                    headers={"Authorization": f"Bearer {credential}"},
                )
        except httpx.TimeoutException as exc:
            raise Timeout(f"provider timed out after {config.timeout_seconds}s") from exc
        except httpx.HTTPError as exc:
            raise MalformedProviderResponse(f"transport failure: {exc}") from exc
        if response.status_code in (401, 403):
            raise AuthFailure(f"provider rejected the credential ({response.status_code})")
        if response.status_code != 200:
            raise MalformedProviderResponse(
                f"provider returned status {response.status_code}"
            )
        try:
            data = response.json()
            content = data["choices"][0]["message"]["content"]
        except (ValueError, LookupError, TypeError) as exc:
            raise MalformedProviderResponse("response is not chat-completions shaped") from exc
        if not isinstance(content, str):
            raise MalformedProviderResponse("message content is not text")
        return content


class ReplayProvider:
    """Canned responses keyed by a hash of the serialized messages."""

    def __init__(self, entries: dict[str, str] | None = None):
        self.entries = dict(entries or {})

    @staticmethod
    def key_for(messages: MessageList) -> str:
        digest = hashlib.sha256(render_messages(messages).encode("utf-8"))
        return digest.hexdigest()

    def record(self, messages: MessageList, response: str) -> str:
        key = self.key_for(messages)
        self.entries[key] = response
        return key

    @classmethod
    def from_file(cls, path: str | Path) -> "ReplayProvider":
        return cls(json.loads(Path(path).read_text(encoding="utf-8")))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.entries, indent=2, sort_keys=True), encoding="utf-8"
        )

    def complete(self, messages: MessageList, config: ProviderConfig) -> str:
        key = self.key_for(messages)
        if key not in self.entries:
            raise ReplayMiss(f"no recorded response for message hash {key}")
        return self.entries[key]


class ScriptedProvider:
    """Returns a fixed sequence of responses across successive calls."""

    def __init__(self, responses: Sequence[str]):
        self.responses = list(responses)
        self._next = 0
        self._lock = threading.Lock()

    def complete(self, messages: MessageList, config: ProviderConfig) -> str:
        with self._lock:
            if self._next >= len(self.responses):
                raise ScriptExhausted(f"script exhausted after {len(self.responses)} responses")
            response = self.responses[self._next]
            self._next += 1
            return response


def extract_dsl(raw: str) -> str:
    """Interior of the first fenced code block, or the whole text trimmed."""
    fence = raw.find("```")
    if fence == -1:
        result = raw.strip()
    else:
        line_end = raw.find("\n", fence)
        if line_end == -1:
            result = ""
        else:
            closing = raw.find("```", line_end + 1)
            interior = raw[line_end + 1 : closing if closing != -1 else len(raw)]
            result = interior.strip()
    if not result:
        raise EmptyExtraction("no usable text in provider output")
    return result


@dataclass(frozen=True)
class GenerationRequest:
    mode: Mode
    description: str
    max_repairs: int = 2

    def __post_init__(self) -> None:
        if self.mode is Mode.REPAIR:
            raise ValueError("generation mode must be INTERFACE or COMPONENT")
        if not self.description.strip():
            raise ValueError("description must not be empty")
        if self.max_repairs < 0:
            raise ValueError("max_repairs must be >= 0")


@dataclass(frozen=True)
class GenerationResult:
    dsl: str
    ast: TutorLayout | Fragment
    html: HtmlText
    lint: LintReport
    attempts: int
    provider_raw: str

    def to_json(self) -> dict:
        is_document = isinstance(self.ast, TutorLayout)
        return {
            "mode": "interface" if is_document else "component",
            "dsl": self.dsl,
            "ast": layout_to_json(self.ast) if is_document else fragment_to_json(self.ast),
            "html": self.html.text,
            "element_index": dict(self.html.element_index),
            "lint": self.lint.to_json(),
            "attempts": self.attempts,
        }


class GenerationFailure(Exception):
    """All attempts produced unparseable or rule-breaking layouts."""

    def __init__(self, attempts: int, history: list[list[ParseError | Finding]]):
        self.attempts = attempts
        self.history = history
        self.last_errors = history[-1] if history else []
        summary = "; ".join(_error_text(e) for e in self.last_errors) or "no output"
        super().__init__(f"generation failed after {attempts} attempts: {summary}")


def _error_text(error: ParseError | Finding) -> str:
    if isinstance(error, ParseError):
        return f"{error.code}: {error.message}"
    return f"{error.rule}: {error.message}"


def generate(
    request: GenerationRequest, provider: Provider, config: ProviderConfig
) -> GenerationResult:
    """Run the full pipeline, repairing on parse errors and rule errors.

    Succeeds with canonical DSL and a clean lint report, or raises
    GenerationFailure after ``1 + max_repairs`` attempts. Provider
    transport errors propagate untouched.
    """
    interface = request.mode is Mode.INTERFACE
    if interface:
        bundle = build_interface_prompt(request.description)
    else:
        bundle = build_component_prompt(request.description)

    history: list[list[ParseError | Finding]] = []
    attempts = 0
    max_attempts = 1 + request.max_repairs
    while attempts < max_attempts:
        raw = provider.complete(serialize(bundle), config)
        attempts += 1
        try:
            dsl_text = extract_dsl(raw)
        except EmptyExtraction:
            dsl_text = ""
        errors: list[ParseError | Finding]
        try:
            ast: TutorLayout | Fragment = (
                parse_document(dsl_text) if interface else parse_fragment(dsl_text)
            )
        except ParseError as exc:
            errors = [exc]
            report = None
        else:
            report = lint_document(ast) if interface else lint_fragment(ast)
            errors = list(report.errors())
        if not errors:
            assert report is not None
            html = render_document(ast) if interface else render_fragment(ast)
            return GenerationResult(
                dsl=pretty_print(ast),
                ast=ast,
                html=html,
                lint=report,
                attempts=attempts,
                provider_raw=raw,
            )
        history.append(errors)
        if attempts < max_attempts:
            bundle = build_repair_prompt(dsl_text or raw, errors, target=request.mode)
    raise GenerationFailure(attempts, history)
