"""Command-line toolchain: parse, format, lint, render, generate, manage
components, run keystroke reports, and serve the HTTP API.

Exit codes: 0 success, 1 domain error (diagnostics on stderr), 2 usage
error. Everything except ``generate --provider http`` and ``serve``
runs fully offline.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import api as service
from . import components as component_store
from .dsl import (
    Fragment,
    ParseError,
    TutorLayout,
    count_nodes,
    line_column,
    parse_document,
    parse_fragment,
    pretty_print,
)
from .gateway import GenerationFailure, GenerationRequest, ProviderError, generate
from .klm import (
    BUNDLED_TRACE_NAMES,
    ZeroBaseline,
    bundled_trace,
    compare,
    estimate,
    format_reduction,
    load_trace,
    report,
)
from .lint import Severity, lint_document, lint_fragment
from .prompts import Mode
from .render import render_document, render_fragment


def _fail_parse(path: str, source: str, error: ParseError) -> None:
    line, column = line_column(source, error.span.start)
    click.echo(f"{path}:{line}:{column}: {error.code}: {error.message}", err=True)
    sys.exit(1)


def _load(path: str, fragment: bool) -> tuple[str, TutorLayout | Fragment]:
    source = Path(path).read_text(encoding="utf-8")
    try:
        node = parse_fragment(source) if fragment else parse_document(source)
    except ParseError as exc:
        _fail_parse(path, source, exc)
    return source, node


@click.group()
def main() -> None:
    """Author, validate, render, and generate tutor practice interfaces."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--fragment", is_flag=True, help="Parse a titleless component fragment.")
def parse(file: str, fragment: bool) -> None:
    """Parse FILE and print an AST summary."""
    _, node = _load(file, fragment)
    counts = count_nodes(node)
    if isinstance(node, TutorLayout):
        click.echo(f"title: {node.title}")
    click.echo(
        "elements: "
        f"{counts['inputs']} inputs, {counts['labels']} labels, "
        f"{counts['rows']} rows, {counts['columns']} columns (depth {counts['depth']})"
    )


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--fragment", is_flag=True, help="Format a titleless component fragment.")
def fmt(file: str, fragment: bool) -> None:
    """Print FILE in canonical form."""
    _, node = _load(file, fragment)
    click.echo(pretty_print(node))


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--fragment", is_flag=True, help="Lint a titleless component fragment.")
@click.option("--json", "as_json", is_flag=True, help="Emit the findings as JSON.")
def lint(file: str, fragment: bool, as_json: bool) -> None:
    """Check FILE against the design rules."""
    _, node = _load(file, fragment)
    result = lint_fragment(node) if fragment else lint_document(node)
    if as_json:
        click.echo(json.dumps(result.to_json(), indent=2))
    else:
        for finding in result.findings:
            where = f" [{finding.element_id}]" if finding.element_id else ""
            click.echo(
                f"{finding.rule} ({finding.severity.value}){where}: {finding.message}",
                err=finding.severity is Severity.ERROR,
            )
    if not result.clean:
        sys.exit(1)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--fragment", is_flag=True, help="Render a titleless component fragment.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write HTML here.")
def render(file: str, fragment: bool, output: str | None) -> None:
    """Render FILE to template HTML."""
    _, node = _load(file, fragment)
    html = render_fragment(node) if fragment else render_document(node)
    if output:
        Path(output).write_text(html.text + "\n", encoding="utf-8")
    else:
        click.echo(html.text)


def _build_provider(provider: str, replay_file: str | None, script_file: str | None):
    config = service.AppConfig(
        provider_kind=provider, replay_file=replay_file, script_file=script_file
    )
    return service.build_provider(config)


@main.command(name="generate")
@click.argument("level", type=click.Choice(["interface", "component"]))
@click.option("--description", required=True, help="What the tutor or component should do.")
@click.option(
    "--provider",
    type=click.Choice(["http", "replay", "scripted"]),
    default="http",
    show_default=True,
)
@click.option("--replay-file", type=click.Path(exists=True, dir_okay=False))
@click.option("--script-file", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-repairs", type=int, default=2, show_default=True)
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False),
              help="Service config JSON; supplies provider settings.")
def generate_cmd(
    level: str,
    description: str,
    provider: str,
    replay_file: str | None,
    script_file: str | None,
    max_repairs: int,
    config_file: str | None,
) -> None:
    """Generate a layout from a description and print the canonical DSL."""
    provider_config = service.ProviderConfig()
    if config_file:
        app_config = service.AppConfig.from_file(config_file)
        provider_config = app_config.provider
    try:
        provider_impl = _build_provider(provider, replay_file, script_file)
    except service.BadConfig as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    mode = Mode.INTERFACE if level == "interface" else Mode.COMPONENT
    request = GenerationRequest(mode=mode, description=description, max_repairs=max_repairs)
    try:
        result = generate(request, provider_impl, provider_config)
    except GenerationFailure as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except ProviderError as exc:
        click.echo(f"provider error: {exc}", err=True)
        sys.exit(1)
    for finding in result.lint.findings:
        click.echo(f"warning: {finding.rule}: {finding.message}", err=True)
    click.echo(result.dsl)


@main.group()
def components() -> None:
    """Manage the reusable component store."""


@components.command()
@click.option("--store", required=True, type=click.Path(file_okay=False))
@click.option("--name", required=True)
@click.option("--description", default="")
@click.option("--dsl-file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--tag", "tags", multiple=True)
def create(store: str, name: str, description: str, dsl_file: str, tags: tuple[str, ...]) -> None:
    """Validate a fragment file and save it as a component."""
    dsl = Path(dsl_file).read_text(encoding="utf-8")
    try:
        record = component_store.ComponentStore(store).create(name, description, dsl, tags)
    except component_store.ComponentError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(record.id)


@components.command(name="list")
@click.option("--store", required=True, type=click.Path(file_okay=False))
@click.option("--tag", default=None)
@click.option("--json", "as_json", is_flag=True)
def list_cmd(store: str, tag: str | None, as_json: bool) -> None:
    """List stored components, newest first."""
    records = component_store.ComponentStore(store).list(tag)
    if as_json:
        click.echo(json.dumps([r.to_json() for r in records], indent=2))
        return
    for record in records:
        tag_text = f" [{', '.join(record.tags)}]" if record.tags else ""
        click.echo(f"{record.id}  {record.name}{tag_text}")


@components.command()
@click.option("--store", required=True, type=click.Path(file_okay=False))
@click.argument("record_id")
def delete(store: str, record_id: str) -> None:
    """Delete a component by id."""
    try:
        component_store.ComponentStore(store).delete(record_id)
    except component_store.NotFound as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo("deleted")


def _resolve_trace(spec: str):
    path = Path(spec)
    if path.exists():
        return load_trace(path)
    stem = path.stem
    if stem in BUNDLED_TRACE_NAMES:
        return bundled_trace(stem)
    click.echo(f"error: no trace file {spec!r} and no bundled trace of that name", err=True)
    sys.exit(2)


@main.group()
def klm() -> None:
    """Keystroke-level cost estimation over action traces."""


@klm.command(name="estimate")
@click.argument("trace")
def klm_estimate(trace: str) -> None:
    """Cost a single trace (.klm file or bundled trace name)."""
    result = estimate(_resolve_trace(trace))
    for op, count in sorted(result.counts.items(), key=lambda kv: kv[0].value):
        click.echo(f"{op.value}: {count}")
    click.echo(f"keystrokes: {result.keystrokes}")
    click.echo(f"total_seconds: {result.total_seconds}")


@klm.command(name="compare")
@click.argument("baseline")
@click.argument("variant")
@click.option("--csv", "as_csv", is_flag=True, help="Emit the table as CSV.")
def klm_compare(baseline: str, variant: str, as_csv: bool) -> None:
    """Compare two traces and print reductions against the baseline."""
    a = estimate(_resolve_trace(baseline))
    b = estimate(_resolve_trace(variant))
    try:
        result = compare(a, b)
    except ZeroBaseline as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if as_csv:
        click.echo(report([(f"{a.name} vs {b.name}", a, b)], csv_format=True))
        return
    click.echo(
        f"keystrokes: {a.keystrokes} -> {b.keystrokes} "
        f"({format_reduction(result.keystrokes_reduction_percent)})"
    )
    click.echo(
        f"time: {a.total_seconds:.2f}s -> {b.total_seconds:.2f}s "
        f"({format_reduction(result.time_reduction_percent)})"
    )


@main.command()
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
@click.option("--store", "store_path", type=click.Path(file_okay=False), default=None)
@click.option("--provider", type=click.Choice(["http", "replay", "scripted"]), default=None)
@click.option("--replay-file", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--script-file", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Service config JSON; flags override it.")
def serve(host, port, store_path, provider, replay_file, script_file, config_file) -> None:
    """Run the HTTP API for the builder UI and external tooling."""
    config = service.AppConfig.from_file(config_file) if config_file else service.AppConfig()
    if host is not None:
        config.host = host
    if port is not None:
        config.port = port
    if store_path is not None:
        config.store_path = store_path
    if provider is not None:
        config.provider_kind = provider
    if replay_file is not None:
        config.replay_file = replay_file
    if script_file is not None:
        config.script_file = script_file
    try:
        service.serve(config)
    except service.BadConfig as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except OSError as exc:
        click.echo(f"error: cannot bind {config.host}:{config.port}: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
