"""Exact binomial arithmetic and the cardinality-only Kruskal-Katona bounds.

Everything here works on Python ints, so no value ever overflows.  The
greedy canonical decomposition is cached because the trie bounds ask for
the same ``(n, k)`` pairs many times over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative n, k; zero when k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class CanonicalRep:
    """``n = sum(C(m, i) for m, i in terms)`` with i running down from k."""

    k: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(binomial(m, i) for m, i in self.terms)

    @property
    def r(self) -> int:
        return self.terms[-1][1] if self.terms else self.k + 1


def _largest_top(rem: int, i: int) -> int:
    # max m with C(m, i) <= rem; caller guarantees rem >= 1 so m >= i
    lo = i
    hi = i + 1
    while binomial(hi, i) <= rem:
        lo = hi
        hi *= 2
    # invariant: C(lo, i) <= rem < C(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, i) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=1 << 16)
def canonical_rep(n: int, k: int) -> CanonicalRep:
    """Greedy k-canonical decomposition of n.

    Picks the largest m_k with C(m_k, k) <= n, then repeats on the
    remainder one level down until nothing is left.  ``n = 0`` gives an
    empty term list.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    terms = []
    rem = n
    i = k
    while rem > 0:
        m = _largest_top(rem, i)
        terms.append((m, i))
        rem -= binomial(m, i)
        i -= 1
    return CanonicalRep(k, tuple(terms))


def _kk_at(terms: tuple[tuple[int, int], ...], p: int) -> int:
    total = 0
    for m, i in terms:
        # m_i - i never increases going down, so the first miss ends it
        if m < i + p:
            break
        total += binomial(m, i + p)
    return total


@lru_cache(maxsize=1 << 16)
def kk_levels(n: int, k: int) -> tuple[int, ...]:
    """``(KK_k^{k+1}(n), KK_k^{k+2}(n), ...)`` up to the last nonzero value.

    The tuple has exactly ``mu(n, k) - k`` entries.
    """
    terms = canonical_rep(n, k).terms
    if not terms:
        return ()
    # the top term is the last to vanish, at p = m_k - k + 1
    return tuple(_kk_at(terms, p) for p in range(1, terms[0][0] - k + 1))


def kk_bound(n: int, k: int, p: int) -> int:
    """Upper bound on the number of (k+p)-candidates from n k-patterns."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    return _kk_at(canonical_rep(n, k).terms, p)


def mu(n: int, k: int) -> int:
    """Largest possible candidate size, the top index of the decomposition.

    An empty level admits no candidates at all and maps to ``k - 1``.
    """
    terms = canonical_rep(n, k).terms
    if not terms:
        return k - 1
    return terms[0][0]


def kk_total(n: int, k: int) -> int:
    return sum(kk_levels(n, k))
