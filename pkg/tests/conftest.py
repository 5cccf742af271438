import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # oracle / randmodels helpers

from testtdo import builtin_schema, minimal_motif, parse

FIXTURE_DIR = Path(__file__).parent / "fixtures" / "axioms"


@pytest.fixture(scope="session")
def schema():
    return builtin_schema()


@pytest.fixture()
def motif():
    return minimal_motif().finalize()


def fixture_text(name: str) -> str:
    return (FIXTURE_DIR / name).read_text(encoding="utf-8")


def fixture_kb(name: str):
    return parse(fixture_text(name))
