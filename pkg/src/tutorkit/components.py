"""File-backed store for reusable interface components.

One JSON document per record in the store directory, named
``<id>.json``, written via temp-file-then-rename so a crash never
leaves a half-written record. Fragments are validated (parse plus
design rules) and canonicalized before they are accepted, so the store
can never hand back an unusable component.

Single writer, many readers: mutations are serialized through one lock.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .dsl import Fragment, ParseError, parse_fragment, pretty_print
from .lint import lint_fragment


class ComponentError(Exception):
    pass


class DuplicateName(ComponentError):
    pass


class InvalidFragment(ComponentError):
    pass


class NotFound(ComponentError):
    pass


@dataclass(frozen=True)
class ComponentRecord:
    id: str
    name: str
    description: str
    dsl: str
    tags: tuple[str, ...]
    created_at: str

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "description": self.description,
            "dsl": self.dsl,
            "tags": list(self.tags),
            "created_at": self.created_at,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ComponentRecord":
        return cls(
            id=data["id"],
            name=data["name"],
            description=data["description"],
            dsl=data["dsl"],
            tags=tuple(data.get("tags", [])),
            created_at=data["created_at"],
        )


def _canonical_fragment(dsl: str) -> str:
    try:
        fragment = parse_fragment(dsl)
    except ParseError as exc:
        raise InvalidFragment(f"component dsl does not parse: {exc.message}") from exc
    report = lint_fragment(fragment)
    if not report.clean:
        rules = ", ".join(f"{f.rule} ({f.message})" for f in report.errors())
        raise InvalidFragment(f"component dsl breaks design rules: {rules}")
    return pretty_print(fragment)


class ComponentStore:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._write_lock = threading.Lock()

    def _path(self, record_id: str) -> Path:
        return self.directory / f"{record_id}.json"

    def create(
        self,
        name: str,
        description: str,
        dsl: str,
        tags: tuple[str, ...] | list[str] = (),
    ) -> ComponentRecord:
        canonical = _canonical_fragment(dsl)
        with self._write_lock:
            lowered = name.lower()
            for existing in self._read_all():
                if existing.name.lower() == lowered:
                    raise DuplicateName(f"a component named {name!r} already exists")
            record = ComponentRecord(
                id=uuid.uuid4().hex,
                name=name,
                description=description,
                dsl=canonical,
                tags=tuple(tags),
                created_at=datetime.now(timezone.utc).isoformat(),
            )
            self._write_atomic(record)
            return record

    def _write_atomic(self, record: ComponentRecord) -> None:
        target = self._path(record.id)
        temp = target.with_suffix(".json.tmp")
        temp.write_text(json.dumps(record.to_json(), indent=2), encoding="utf-8")
        os.replace(temp, target)

    def _read_all(self) -> list[ComponentRecord]:
        records = []
        for path in self.directory.glob("*.json"):
            records.append(ComponentRecord.from_json(json.loads(path.read_text("utf-8"))))
        return records

    def get(self, record_id: str) -> ComponentRecord:
        path = self._path(record_id)
        if not path.exists():
            raise NotFound(f"no component with id {record_id!r}")
        return ComponentRecord.from_json(json.loads(path.read_text("utf-8")))

    def list(self, tag: str | None = None) -> list[ComponentRecord]:
        records = self._read_all()
        if tag is not None:
            records = [r for r in records if tag in r.tags]
        records.sort(key=lambda r: (r.created_at, r.id), reverse=True)
        return records

    def delete(self, record_id: str) -> None:
        with self._write_lock:
            path = self._path(record_id)
            if not path.exists():
                raise NotFound(f"no component with id {record_id!r}")
            path.unlink()

    def instantiate(self, record_id: str) -> Fragment:
        """Parsed fragment of the stored dsl; the caller re-assigns ids on insertion."""
        return parse_fragment(self.get(record_id).dsl)
