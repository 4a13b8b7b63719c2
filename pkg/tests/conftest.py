from __future__ import annotations

import os
from itertools import combinations
from pathlib import Path

import pytest

from kkminer.oracle import colex_family

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

TINY = "1 2 3\n1 2 3\n1 2\n"


def colex13() -> list[tuple[int, ...]]:
    """13 colex-first 3-sets (items 1..6)."""
    return colex_family(13, 3)


def two_blocks() -> list[tuple[int, ...]]:
    """{5,7,8}, {5,8,9} and every 3-subset of {1..5} and of {3..7}: 21 sets."""
    sets = {(5, 7, 8), (5, 8, 9)}
    sets |= set(combinations(range(1, 6), 3))
    sets |= set(combinations(range(3, 8), 3))
    return sorted(sets)


def six_triples():
    """All 3-subsets of {1..6}; {1,2,3,4} and {3,4,5,6} known infrequent."""
    L3 = list(combinations(range(1, 7), 3))
    I4 = [(1, 2, 3, 4), (3, 4, 5, 6)]
    return L3, I4


@pytest.fixture
def tiny_path(tmp_path):
    p = tmp_path / "tiny.dat"
    p.write_text(TINY)
    return p


def mushroom_path() -> Path:
    return DATA / "mushroom.dat"


def bms_path() -> Path:
    return Path(os.environ.get("KKMINER_BMS", DATA / "BMS-WebView-1.dat"))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key][1])
