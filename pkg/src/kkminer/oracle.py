"""Deliberately naive ground truth for the bound tests.

Nothing in here shares code with the trie or the arithmetic bounds: the
candidate sets are found by enumerating every subset of the item universe
and checking the definition directly.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

ItemSet = tuple[int, ...]


def colex_successor(s: ItemSet) -> ItemSet:
    """Next k-set of positive integers after ``s`` in colex order."""
    s = list(s)
    k = len(s)
    i = 0
    # bump the lowest element that has room, reset everything below it
    while i < k - 1 and s[i] + 1 == s[i + 1]:
        i += 1
    s[i] += 1
    for j in range(i):
        s[j] = j + 1
    return tuple(s)


def colex_iter(k: int) -> Iterator[ItemSet]:
    s = tuple(range(1, k + 1))
    while True:
        yield s
        s = colex_successor(s)


def colex_family(n: int, k: int) -> list[ItemSet]:
    """The first n k-subsets of {1, 2, ...} in colex order (sorted tuples)."""
    if k < 1:
        raise ValueError("k must be positive")
    out = []
    for s in colex_iter(k):
        if len(out) == n:
            break
        out.append(s)
    return out


def colex_key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s, reverse=True))


def _level(L) -> int:
    sizes = {len(s) for s in L}
    if len(sizes) > 1:
        raise ValueError(f"family mixes sizes {sorted(sizes)}")
    return sizes.pop()


def brute_force_candidates(L: Iterable[Iterable[int]], p: int) -> set[ItemSet]:
    """All (k+p)-sets over the items of L whose k-subsets all lie in L."""
    fam = {tuple(sorted(s)) for s in L}
    if not fam:
        return set()
    k = _level(fam)
    universe = sorted({x for s in fam for x in s})
    out = set()
    for c in combinations(universe, k + p):
        if all(sub in fam for sub in combinations(c, k)):
            out.add(c)
    return out


def _has_candidate(fam: set[ItemSet], universe: list[int], size: int, k: int) -> bool:
    return any(all(sub in fam for sub in combinations(c, k)) for c in combinations(universe, size))


def maxsize(L: Iterable[Iterable[int]]) -> int:
    """Largest size holding a candidate of L (k when there is none)."""
    fam = {tuple(sorted(s)) for s in L}
    if not fam:
        return 0
    k = _level(fam)
    universe = sorted({x for s in fam for x in s})
    size = k
    while size < len(universe) and _has_candidate(fam, universe, size + 1, k):
        size += 1
    return size


def brute_force_gen_candidates(L_levels, I_levels, k: int, p: int) -> set[ItemSet]:
    """Generalized candidates of size k+p, straight from the definition.

    ``L_levels[j]`` and ``I_levels[j]`` hold the known frequent and known
    infrequent (k+j)-sets; missing levels count as empty.
    """
    Ls = [{tuple(sorted(s)) for s in lev} for lev in L_levels]
    Is = [{tuple(sorted(s)) for s in lev} for lev in I_levels]
    base = Ls[0] if Ls else set()
    if not base:
        return set()
    infrequent = set().union(*Is[1:]) if len(Is) > 1 else set()
    known = set()
    if p < len(Ls):
        known |= Ls[p]
    if p < len(Is):
        known |= Is[p]
    universe = sorted({x for s in base for x in s})
    out = set()
    for c in combinations(universe, k + p):
        if c in known:
            continue
        if not all(sub in base for sub in combinations(c, k)):
            continue
        if any(sub in infrequent
               for size in range(k + 1, k + p + 1)
               for sub in combinations(c, size)):
            continue
        out.add(c)
    return out
