#!/usr/bin/env python3
"""Build a replay-provider fixture file from description/response pairs.

The replay provider keys canned responses by a hash of the serialized
prompt messages, so fixtures must be produced with the same prompt
assets that will serve them. This script pins the pairs used by the
builder UI's smoke tests; rerun it after changing prompt assets.

Usage: python scripts/make_replay_fixture.py [output.json]
"""

import sys
from pathlib import Path

from tutorkit.gateway import ReplayProvider
from tutorkit.prompts import build_component_prompt, build_interface_prompt, serialize

INTERFACE_PAIRS = [
    (
        "A two-step linear equation tutor with one row per step",
        (
            "title[Two-Step Equation Tutor]\n"
            "row { label[Step 1: isolate the variable term] input[new equation] }\n"
            "row { label[Step 2: solve for the variable] input[value of x] }"
        ),
    ),
]

COMPONENT_PAIRS = [
    (
        "A labelled result row with one input",
        "row { label[Result:] input[final value] }",
    ),
]

DEFAULT_OUTPUT = Path(__file__).parent.parent / "frontend" / "tests" / "fixtures" / "replay.json"


def main() -> None:
    output = Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_OUTPUT
    provider = ReplayProvider()
    for description, response in INTERFACE_PAIRS:
        provider.record(serialize(build_interface_prompt(description)), response)
    for description, response in COMPONENT_PAIRS:
        provider.record(serialize(build_component_prompt(description)), response)
    output.parent.mkdir(parents=True, exist_ok=True)
    provider.save(output)
    print(f"wrote {len(provider.entries)} entries to {output}")


if __name__ == "__main__":
    main()
