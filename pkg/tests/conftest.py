from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

CORPUS_NAMES = (
    "complex_equation",
    "escapes",
    "minimal",
    "nested_columns",
    "placeholders",
    "simple_sequential",
)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture(scope="session")
def corpus_sources() -> dict[str, str]:
    return {name: (FIXTURES / f"{name}.tut").read_text("utf-8") for name in CORPUS_NAMES}
