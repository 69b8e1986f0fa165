#!/usr/bin/env python3
"""Walk the generate -> validate -> repair loop offline.

A scripted provider first returns a layout that breaks the grammar
(a button element), then a layout that breaks a design rule (two
adjacent inputs), then a conforming one; the pipeline repairs twice and
succeeds on the third attempt. No network, no credentials.

Usage: python scripts/demo_offline_generate.py
"""

from tutorkit.gateway import GenerationRequest, ProviderConfig, ScriptedProvider, generate
from tutorkit.prompts import Mode

RESPONSES = [
    "title[Equation Practice] button { label[Solve] }",
    "title[Equation Practice] row { input[a] input[b] }",
    (
        "title[Equation Practice]\n"
        "row { label[First operand:] input[a] }\n"
        "row { label[Second operand:] input[b] }\n"
        "row { label[Sum:] input[a + b] }"
    ),
]


def main() -> None:
    provider = ScriptedProvider(RESPONSES)
    request = GenerationRequest(Mode.INTERFACE, "an addition practice tutor", max_repairs=2)
    result = generate(request, provider, ProviderConfig())

    print(f"succeeded after {result.attempts} attempts\n")
    print("canonical layout:")
    print(result.dsl)
    print()
    print("rendered HTML:")
    print(result.html.text)


if __name__ == "__main__":
    main()
