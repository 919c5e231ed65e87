from __future__ import annotations

from pathlib import Path

import pytest

from eolab.vm import EnumeratorProgram, parse_program

FIXTURES = Path(__file__).parent / "fixtures"
PROGRAMS = FIXTURES / "programs"

#: Program pairs exercised by the search/oracle agreement suites.
PAIR_NAMES = [
    ("evens", "evens"),
    ("evens", "alternating"),
    ("alternating", "jumpy"),
    ("countdown", "evens"),
    ("evens_only", "slow_pairs"),
    ("jumpy", "countdown"),
    ("slow_pairs", "alternating"),
]


def load_program(name: str) -> EnumeratorProgram:
    return parse_program((PROGRAMS / f"{name}.json").read_text(encoding="utf-8"))


def program_pairs() -> list[tuple[EnumeratorProgram, EnumeratorProgram]]:
    return [(load_program(a), load_program(b)) for a, b in PAIR_NAMES]


@pytest.fixture
def programs_dir() -> Path:
    return PROGRAMS
