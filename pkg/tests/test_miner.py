import io
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kkminer.data import from_raw, load_transactions
from kkminer.miner import (STATS_HEADER, BoundReport, MinerConfig, count_level, format_patterns,
                           mine, read_stats, write_stats)
from kkminer.trie import PatternTrie

from conftest import TINY

dbs = st.lists(st.lists(st.integers(0, 9), min_size=1, max_size=7), min_size=1, max_size=30)


def brute_frequent(raw, minsup, strict=False):
    rows = [set(r) for r in raw]
    items = sorted(set().union(*rows))
    out = {}
    for size in range(1, len(items) + 1):
        found = False
        for s in combinations(items, size):
            sup = sum(1 for r in rows if r.issuperset(s))
            if (sup > minsup) if strict else (sup >= minsup):
                out[s] = sup
                found = True
        if not found:
            break
    return out


def test_tiny_db_all_subsets():
    db = load_transactions(io.StringIO(TINY), reorder=True)
    res = mine(db, MinerConfig(minsup=2))
    assert res.patterns == {(1,): 3, (2,): 3, (3,): 2, (1, 2): 3, (1, 3): 2, (2, 3): 2, (1, 2, 3): 2}
    assert res.passes == 3 and len(res.reports) == 3


def test_format_patterns_order():
    db = load_transactions(io.StringIO("3 1\n3 2\n3 1 2\n"), reorder=True)
    text = format_patterns(mine(db, MinerConfig(minsup=1)))
    assert text.splitlines() == ["1 (2)", "2 (2)", "3 (3)", "1 2 (1)", "1 3 (2)", "2 3 (2)", "1 2 3 (1)"]


def test_count_level_example():
    db = load_transactions(io.StringIO(TINY))
    t = PatternTrie.from_itemsets([(0, 1), (0, 2), (1, 2)])
    assert count_level(db, t, 2) == {(0, 1): 3, (0, 2): 2, (1, 2): 2}
    t = PatternTrie.from_itemsets([(0, 1), (0, 2), (1, 2)])
    count_level(db, t, 2, minsup=3)
    assert t.level() == [(0, 1)]


def test_duplicate_transactions_count_separately():
    db = from_raw([[1, 2]] * 4)
    assert mine(db, MinerConfig(minsup=4)).patterns[(1, 2)] == 4


def test_config_validation():
    with pytest.raises(ValueError):
        MinerConfig(minsup=0)
    with pytest.raises(ValueError):
        MinerConfig(minsup=1, bound_kind="nope")
    with pytest.raises(ValueError):
        MinerConfig(minsup=1, combine_limit=-1)


def test_empty_db():
    res = mine(from_raw([]), MinerConfig(minsup=1))
    assert res.patterns == {} and res.passes == 0 and res.reports == []


def test_strict_threshold():
    db = load_transactions(io.StringIO(TINY))
    res = mine(db, MinerConfig(minsup=2, strict=True))
    assert set(res.patterns) == {(1,), (2,), (1, 2)}


@settings(max_examples=60, deadline=None)
@given(dbs, st.integers(1, 4), st.sampled_from(["kk", "kk_star", "gkk", "gkk_star"]),
       st.sampled_from(["bitmap", "scan"]), st.booleans())
def test_matches_brute_force(raw, minsup, kind, counter, reorder):
    db = from_raw(raw, reorder=reorder)
    res = mine(db, MinerConfig(minsup=minsup, bound_kind=kind, counter=counter, reorder=reorder))
    assert res.patterns == brute_frequent(raw, minsup)


@settings(max_examples=60, deadline=None)
@given(dbs, st.integers(1, 3), st.integers(0, 200))
def test_combining_is_safe(raw, minsup, limit):
    db = from_raw(raw, reorder=True)
    plain = mine(db, MinerConfig(minsup=minsup))
    comb = mine(db, MinerConfig(minsup=minsup, combine_limit=limit))
    assert comb.patterns == plain.patterns
    assert comb.passes <= plain.passes


@settings(max_examples=60, deadline=None)
@given(dbs, st.integers(1, 3))
def test_reports_are_sound(raw, minsup):
    db = from_raw(raw, reorder=True)
    res = mine(db, MinerConfig(minsup=minsup))
    for i, r in enumerate(res.reports):
        assert r.actual_next <= r.gkkstar_next <= r.kkstar_next <= r.kk_next
        assert r.gkkstar_total <= r.kkstar_total <= r.kk_total
        assert r.mu_star <= r.mu
        # passes still to run after this level cannot exceed mu* - k
        assert len(res.reports) - 1 - i <= max(r.mu_star - r.level, 0)


@settings(max_examples=40, deadline=None)
@given(dbs, st.integers(1, 3))
def test_reorder_only_changes_reports(raw, minsup):
    a = mine(from_raw(raw, reorder=True), MinerConfig(minsup=minsup, reorder=True))
    b = mine(from_raw(raw, reorder=False), MinerConfig(minsup=minsup, reorder=False))
    assert a.patterns == b.patterns


def _rare_quads_db():
    # 4-subsets of {1..6} as transactions; {1,2,3,4} and {3,4,5,6} stay rare
    rare = {(1, 2, 3, 4), (3, 4, 5, 6)}
    rows = []
    for s in combinations(range(1, 7), 4):
        rows += [s] * (1 if s in rare else 2)
    return from_raw(rows)


def test_side_information_tightens_next_bound():
    res = mine(_rare_quads_db(), MinerConfig(minsup=2, reorder=False))
    lvl4 = res.reports[3]
    assert (lvl4.freq_count, lvl4.actual_next) == (13, 2)
    assert lvl4.kkstar_next == 3 and lvl4.gkkstar_next == 2


def test_combine_triggers_under_limit():
    db = _rare_quads_db()
    plain = mine(db, MinerConfig(minsup=2, reorder=False))
    comb = mine(db, MinerConfig(minsup=2, reorder=False, combine_limit=22))
    assert comb.combined_at == 3 and comb.passes == plain.passes - 1
    assert comb.patterns == plain.patterns
    late = mine(db, MinerConfig(minsup=2, reorder=False, combine_limit=21))
    assert late.combined_at == 4 and late.passes == plain.passes


def test_zero_bound_stops_without_a_pass():
    db = from_raw([[1, 2], [3, 4], [1, 2], [3, 4]])
    res = mine(db, MinerConfig(minsup=2))
    # pairs {1,2},{3,4} are disjoint, so the bound ends the run after pass 2
    assert res.passes == 2 and res.reports[-1].kkstar_next == 0


def test_memory_budget_fallback():
    db = _rare_quads_db()
    res = mine(db, MinerConfig(minsup=2, reorder=False, combine_limit=10**9, memory_budget=5))
    assert res.fell_back and res.combined_at is None
    assert res.patterns == mine(db, MinerConfig(minsup=2, reorder=False)).patterns


def test_stats_csv(tmp_path):
    path = tmp_path / "s.csv"
    write_stats([], path)
    assert path.read_text().strip() == ",".join(STATS_HEADER)
    db = load_transactions(io.StringIO(TINY))
    res = mine(db, MinerConfig(minsup=2, bound_kind="kk", stats_path=str(path)))
    rows = read_stats(path)
    assert len(rows) == len(res.reports) == 3
    assert rows[0]["kkstar_next"] == "" and rows[0]["gkkstar_total"] == ""
    assert rows[0]["kk_next"] == "3"


def test_stats_write_error_names_path(tmp_path):
    bad = tmp_path / "missing" / "s.csv"
    with pytest.raises(OSError, match="missing"):
        write_stats([BoundReport(level=1, freq_count=1)], bad)


def test_ratio():
    r = BoundReport(level=2, freq_count=5, actual_next=4, kkstar_next=5)
    assert r.ratio == 1.25
    assert BoundReport(level=2, freq_count=5).ratio is None
