import io

import pytest
from hypothesis import given, settings, strategies as st

from kkminer.counting import BitmapIndex, count_bitmap, count_scan
from kkminer.data import TransactionParseError, assign_ids, from_raw, load_transactions
from kkminer.trie import PatternTrie, iter_depth

from conftest import TINY

dbs = st.lists(st.lists(st.integers(0, 12), min_size=1, max_size=8), min_size=1, max_size=40)


def test_load_tiny(tiny_path):
    db = load_transactions(tiny_path)
    assert len(db) == 3
    assert db.counts == {1: 3, 2: 3, 3: 2}


def test_load_from_streams():
    assert len(load_transactions(io.StringIO(TINY))) == 3
    assert len(load_transactions(io.BytesIO(TINY.encode()))) == 3


def test_empty_input_is_valid():
    db = load_transactions(io.StringIO(""))
    assert len(db) == 0 and db.labels == []


def test_duplicates_collapse_and_blank_lines_skip():
    db = load_transactions(io.StringIO("1 1 2\n\n   \n2 1\n"))
    assert [db.decode(t) for t in db.transactions] == [(1, 2), (1, 2)]


def test_parse_error_names_line():
    with pytest.raises(TransactionParseError) as info:
        load_transactions(io.StringIO("1 2\n3 x4\n"))
    assert info.value.line_no == 2 and info.value.token == "x4"
    with pytest.raises(TransactionParseError):
        load_transactions(io.StringIO("1 -2\n"))


def test_reorder_rule():
    db = load_transactions(io.StringIO(TINY), reorder=True)
    # label 3 is rarest; 1 and 2 tie and keep label order
    assert db.labels == [3, 1, 2]
    plain = assign_ids(db, reorder=False)
    assert plain.labels == [1, 2, 3]
    same = from_raw([[5, 7], [7, 9], [9, 5]], reorder=True)
    assert same.labels == [5, 7, 9]


@given(dbs, st.booleans())
def test_ids_are_a_bijection_and_rows_sorted(raw, reorder):
    db = from_raw(raw, reorder=reorder)
    assert sorted(db.labels) == sorted({x for r in raw for x in r})
    for t, r in zip(db.transactions, raw):
        assert list(t) == sorted(set(t))
        assert db.decode(t) == tuple(sorted(set(r)))
        assert db.encode(db.decode(t)) == t


def _trie_of_all_subsets(db, max_len):
    from itertools import combinations
    t = PatternTrie()
    n = len(db.labels)
    for size in range(1, max_len + 1):
        for s in combinations(range(n), size):
            t.insert(s)
    return t


def test_count_tiny_pairs():
    db = load_transactions(io.StringIO(TINY))
    t = PatternTrie.from_itemsets([(0, 1), (0, 2), (1, 2)])
    count_scan(db, t, 2)
    assert [t.find(s).support for s in [(0, 1), (0, 2), (1, 2)]] == [3, 2, 2]


@settings(max_examples=60, deadline=None)
@given(dbs, st.integers(1, 3), st.integers(0, 2))
def test_backends_agree_with_direct_count(raw, lo, extra):
    db = from_raw(raw)
    if len(db.labels) > 9:
        return
    hi = lo + extra
    a = _trie_of_all_subsets(db, hi)
    b = _trie_of_all_subsets(db, hi)
    count_scan(db, a, lo, hi)
    count_bitmap(BitmapIndex(db), b, lo, hi)
    rows = [set(t) for t in db.transactions]
    for d in range(lo, hi + 1):
        for s in iter_depth(a.root, d):
            want = sum(1 for r in rows if r.issuperset(s))
            assert a.find(s).support == want == b.find(s).support


def test_bitmap_support_direct():
    db = load_transactions(io.StringIO(TINY))
    idx = BitmapIndex(db)
    assert idx.support([0, 1, 2]) == 2 and idx.support([]) == 3
