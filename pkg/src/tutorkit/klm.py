"""Keystroke-level estimation of interface-building effort.

A trace is a scripted sequence of the five classic operators (K
keystroke, P point, B button press, H homing, M mental preparation);
its cost is the exact weighted sum of operator counts. Arithmetic runs
on Decimal so totals, concatenation, and scaling are exact, never
float-approximate.

The bundled traces model hand-building versus description-driven
generation of one simple and one complex practice interface; their
keystroke totals are the pinned reference outcomes. Wall-clock build
times, in contrast, were measured with human operators and cannot be
recomputed from a simulation, so they ship only as the
MEASURED_BUILD_SECONDS reference constants.
"""

from __future__ import annotations

import enum
import io
import math
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from importlib import resources
from pathlib import Path


class Operator(enum.Enum):
    K = "K"  # keystroke
    P = "P"  # point with the mouse
    B = "B"  # mouse button press or release
    H = "H"  # home hands between keyboard and mouse
    M = "M"  # mental preparation


class TraceError(ValueError):
    pass


class UnknownOperator(TraceError):
    pass


class BadRepeat(TraceError):
    pass


class ZeroBaseline(ValueError):
    pass


@dataclass(frozen=True)
class Action:
    op: Operator
    repeat: int = 1
    annotation: str | None = None


@dataclass(frozen=True)
class ActionTrace:
    name: str
    actions: tuple[Action, ...]


def _as_decimal(value) -> Decimal:
    return value if isinstance(value, Decimal) else Decimal(str(value))


@dataclass(frozen=True)
class OperatorTimes:
    k: Decimal
    p: Decimal
    b: Decimal
    h: Decimal
    m: Decimal

    def __post_init__(self) -> None:
        for name in ("k", "p", "b", "h", "m"):
            value = _as_decimal(getattr(self, name))
            if value < 0:
                raise ValueError(f"operator time {name.upper()} must be >= 0")
            object.__setattr__(self, name, value)

    def seconds(self, op: Operator) -> Decimal:
        return getattr(self, op.value.lower())


# Standard durations for an able typist; the trace costs are fully
# configurable because no single set of durations is canonical.
DEFAULT_TIMES = OperatorTimes(k="0.28", p="1.1", b="0.1", h="0.4", m="1.35")

# Wall-clock seconds measured with human operators building the same two
# interfaces by hand ("classical") and with description-driven generation
# ("ai"). These are observations, not simulation outputs; reports quote
# them verbatim next to the simulated keystroke totals.
MEASURED_BUILD_SECONDS = {
    ("simple", "classical"): 187,
    ("simple", "ai"): 143,
    ("complex", "classical"): 372,
    ("complex", "ai"): 116,
}

_REPEAT_RE = re.compile(r"x(\d+)$")


def parse_trace(text: str, name: str = "trace") -> ActionTrace:
    """Parse the line format ``<OP> [xN] [# annotation]``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    actions: list[Action] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        body, _, comment = stripped.partition("#")
        annotation = comment.strip() or None
        parts = body.split()
        try:
            op = Operator(parts[0])
        except ValueError:
            raise UnknownOperator(f"line {lineno}: unknown operator {parts[0]!r}") from None
        repeat = 1
        if len(parts) == 2:
            match = _REPEAT_RE.fullmatch(parts[1])
            if not match:
                raise BadRepeat(f"line {lineno}: expected xN repeat, got {parts[1]!r}")
            repeat = int(match.group(1))
            if repeat < 1:
                raise BadRepeat(f"line {lineno}: repeat must be >= 1")
        elif len(parts) > 2:
            raise BadRepeat(f"line {lineno}: too many fields in {body.strip()!r}")
        actions.append(Action(op=op, repeat=repeat, annotation=annotation))
    return ActionTrace(name=name, actions=tuple(actions))


def load_trace(path: str | Path) -> ActionTrace:
    path = Path(path)
    return parse_trace(path.read_text(encoding="utf-8"), name=path.stem)


BUNDLED_TRACE_NAMES = ("classical_simple", "ai_simple", "classical_complex", "ai_complex")


def bundled_trace(name: str) -> ActionTrace:
    if name not in BUNDLED_TRACE_NAMES:
        raise KeyError(f"no bundled trace {name!r}; have {', '.join(BUNDLED_TRACE_NAMES)}")
    text = (resources.files("tutorkit") / "traces" / f"{name}.klm").read_text("utf-8")
    return parse_trace(text, name=name)


@dataclass(frozen=True)
class KlmEstimate:
    name: str
    counts: dict[Operator, int]
    total_seconds: Decimal

    @property
    def keystrokes(self) -> int:
        return self.counts.get(Operator.K, 0)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "counts": {op.value: self.counts.get(op, 0) for op in Operator},
            "keystrokes": self.keystrokes,
            "total_seconds": str(self.total_seconds),
        }


def estimate(trace: ActionTrace, times: OperatorTimes = DEFAULT_TIMES) -> KlmEstimate:
    """Exact weighted sum of operator counts."""
    counts = {op: 0 for op in Operator}
    for action in trace.actions:
        counts[action.op] += action.repeat
    total = sum(
        (Decimal(count) * times.seconds(op) for op, count in counts.items()),
        start=Decimal(0),
    )
    return KlmEstimate(name=trace.name, counts=counts, total_seconds=total)


def _floor_percent(baseline: Fraction, other: Fraction) -> int:
    return math.floor((baseline - other) * 100 / baseline)


@dataclass(frozen=True)
class ComparisonReport:
    baseline: KlmEstimate
    variant: KlmEstimate
    keystrokes_reduction_percent: int
    time_reduction_percent: int

    def to_json(self) -> dict:
        return {
            "baseline": self.baseline.to_json(),
            "variant": self.variant.to_json(),
            "keystrokes_reduction_percent": self.keystrokes_reduction_percent,
            "time_reduction_percent": self.time_reduction_percent,
        }


def compare(a: KlmEstimate, b: KlmEstimate) -> ComparisonReport:
    """Floor-rounded percentage reductions of ``b`` relative to baseline ``a``."""
    if a.keystrokes == 0 or a.total_seconds == 0:
        raise ZeroBaseline("baseline estimate has no keystrokes or zero total time")
    return ComparisonReport(
        baseline=a,
        variant=b,
        keystrokes_reduction_percent=_floor_percent(
            Fraction(a.keystrokes), Fraction(b.keystrokes)
        ),
        time_reduction_percent=_floor_percent(
            Fraction(a.total_seconds), Fraction(b.total_seconds)
        ),
    )


def format_reduction(percent: int) -> str:
    if percent == 0:
        return "0%"
    return f"-{percent}%" if percent > 0 else f"+{-percent}%"


def report(pairs: list[tuple[str, KlmEstimate, KlmEstimate]], csv_format: bool = False) -> str:
    """Comparison table over (name, baseline estimate, variant estimate) rows."""
    header = (
        "interface",
        "time_classical_s",
        "time_ai_s",
        "time_reduction",
        "keys_classical",
        "keys_ai",
        "keys_reduction",
    )
    rows = [header]
    for name, classical, ai in pairs:
        comparison = compare(classical, ai)
        rows.append(
            (
                name,
                f"{classical.total_seconds:.2f}",
                f"{ai.total_seconds:.2f}",
                format_reduction(comparison.time_reduction_percent),
                str(classical.keystrokes),
                str(ai.keystrokes),
                format_reduction(comparison.keystrokes_reduction_percent),
            )
        )
    if csv_format:
        import csv as csv_module

        buffer = io.StringIO()
        writer = csv_module.writer(buffer)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    return "\n".join(lines)
