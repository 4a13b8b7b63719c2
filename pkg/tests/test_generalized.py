from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kkminer.combinatorics import kk_bound, kk_total, mu
from kkminer.generalized import (LevelFamilies, g_mu, g_mu_star, gen_candidates, gkk_bound,
                                 gkk_levels, gkk_star, gkk_star_levels, gkk_star_total,
                                 gkk_total, validate)
from kkminer.oracle import brute_force_gen_candidates
from kkminer.trie import PatternTrie, kk_star, kk_star_total, mu_star
from kkminer.verify import random_families

from conftest import six_triples, two_blocks


def rare_quads_families():
    L3, I4 = six_triples()
    return LevelFamilies.build(3, [L3], [[], I4])


def test_size_bounds_with_rare_quads():
    sizes_L, sizes_I = [20], [0, 2]
    assert [gkk_bound(sizes_L, sizes_I, 3, p) for p in (1, 2, 3)] == [13, 3, 0]
    assert g_mu(sizes_L, sizes_I, 3) == 5
    assert gkk_total(sizes_L, sizes_I, 3) == 16


def test_structural_bounds_with_rare_quads():
    fam = rare_quads_families()
    assert validate(fam) is None
    assert [gkk_star(fam, p) for p in (1, 2, 3)] == [13, 2, 0]
    assert g_mu_star(fam) == 5
    assert gkk_star_total(fam) == 15


def test_rare_quads_direct_enumeration():
    L3, I4 = six_triples()
    got = [brute_force_gen_candidates([L3], [[], I4], 3, p) for p in (1, 2, 3)]
    assert [len(g) for g in got] == [13, 2, 0]
    assert got[1] == {(1, 2, 3, 5, 6), (1, 2, 4, 5, 6)}


def test_validate_catches_each_breach():
    bad = LevelFamilies.build(3, [[(1, 2, 3)], [(1, 2, 3, 4)]])
    v = validate(bad)
    assert v.kind == "closure" and v.pattern == (1, 2, 3, 4)
    L3 = list(combinations(range(1, 5), 3))
    both = LevelFamilies.build(3, [L3, [(1, 2, 3, 4)]], [[], [(1, 2, 3, 4)]])
    assert validate(both).kind == "overlap"
    wrong = LevelFamilies.build(2, [[(1, 2), (1, 2, 3)]])
    assert validate(wrong).kind == "size"


def test_structural_path_refuses_invalid_input():
    bad = LevelFamilies.build(3, [[(1, 2, 3)], [(1, 2, 3, 4)]])
    with pytest.raises(ValueError, match="closure"):
        gkk_star(bad, 1)


def test_reduction_without_side_information():
    for sets in (two_blocks(), list(combinations(range(1, 7), 3))):
        n = len(sets)
        fam = LevelFamilies.build(3, [sets])
        t = PatternTrie.from_itemsets(sets)
        for p in range(1, 5):
            assert gkk_bound([n], [], 3, p) == kk_bound(n, 3, p)
            assert gkk_star(fam, p) == kk_star(t, p)
        assert g_mu([n], [], 3) == mu(n, 3)
        assert gkk_total([n], [], 3) == kk_total(n, 3)
        assert g_mu_star(fam) == mu_star(t)
        assert gkk_star_total(fam) == kk_star_total(t)


def test_saturated_infrequent_level():
    L2 = list(combinations(range(4), 2))
    I3 = list(combinations(range(4), 3))
    assert gkk_bound([6], [0, 4], 2, 1) == 0
    assert g_mu([6], [0, 4], 2) == 2
    fam = LevelFamilies.build(2, [L2], [[], I3])
    assert g_mu_star(fam) == 2 and gkk_star_total(fam) == 0


def test_empty_base():
    assert gkk_total([0], [], 3) == 0
    assert g_mu([0], [], 3) == 2


def test_negative_subtraction_clamps():
    assert gkk_bound([3], [0, 50], 2, 1) == 0


def test_bound_revives_after_known_level():
    # all pairs and all triples of {1..4} known frequent: nothing new of size 3,
    # yet {1,2,3,4} is still a candidate
    L2 = list(combinations(range(1, 5), 2))
    L3 = list(combinations(range(1, 5), 3))
    sizes = ([6, 4], [])
    assert gkk_levels(*sizes, 2) == (0, 1)
    assert g_mu(*sizes, 2) == 4
    assert brute_force_gen_candidates([L2, L3], [], 2, 2) == {(1, 2, 3, 4)}
    fam = LevelFamilies.build(2, [L2, L3])
    assert gkk_star(fam, 2) >= 1


def _random_fam(seed):
    import random
    rng = random.Random(seed)
    k = rng.randint(1, 4)
    return random_families(rng, k, rng.randint(k + 1, 11), rng.randint(1, 60), rng.randint(0, 3))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_chains_on_random_families(seed):
    fam = _random_fam(seed)
    assert validate(fam) is None
    k = fam.k
    base = fam.L_at(0)
    t = PatternTrie.from_itemsets(base)
    sizes_L, sizes_I = fam.sizes()
    for p in range(1, 5):
        gen = len(brute_force_gen_candidates(fam.L, fam.I, k, p))
        known = len(fam.L_at(p)) + len(fam.I_at(p))
        assert gen <= gkk_star(fam, p) <= max(0, kk_star(t, p) - known)
        assert gen <= gkk_bound(sizes_L, sizes_I, k, p) <= max(0, kk_bound(len(base), k, p) - known)
        assert gkk_star(fam, p) <= gkk_bound(sizes_L, sizes_I, k, p)
    assert g_mu_star(fam) <= mu_star(t)
    assert gkk_star_total(fam) <= kk_star_total(t)
    assert g_mu(sizes_L, sizes_I, k) <= mu(len(base), k)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_recursion_matches_definition(seed):
    fam = _random_fam(seed)
    for p in range(1, 4):
        assert gen_candidates(fam, p) == brute_force_gen_candidates(fam.L, fam.I, fam.k, p)


def test_plain_projection_is_looser():
    # under child 1 the plain projection forgets {3,4,5,6}; the split keeps it
    # one level up, where it excludes the 5-set {1,3,4,5,6}
    fam = rare_quads_families()
    plain = fam.project(1)
    split = fam.split()[1]
    assert all((3, 4, 5, 6) not in lev for lev in plain.I)
    assert split.I_at(2) == {(3, 4, 5, 6)}
    assert gkk_star_levels(LevelFamilies(3, fam.L, fam.I)) == (13, 2)
