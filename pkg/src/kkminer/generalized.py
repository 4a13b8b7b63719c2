"""Bounds that also use known frequent and known infrequent larger patterns.

A :class:`LevelFamilies` holds ``L_k .. L_{k+q}`` (frequent) and
``I_k .. I_{k+q}`` (infrequent).  The size-only bounds (gKK, g_mu, gKK total)
see just the cardinalities; the structural ones (gKK*, g_mu*, gKK* total)
recurse over projections by smallest item like KK* does.

Bound sequences are evaluated for offsets ``p = 1 .. mu(|L_k|, k) - k``;
beyond that the plain KK bound is already zero and so is everything here.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .combinatorics import binomial, kk_bound, kk_levels
from .trie import ItemSet, candidates_of


def _freeze(levels) -> tuple[frozenset, ...]:
    return tuple(frozenset(tuple(sorted(s)) for s in lev) for lev in levels)


@dataclass(frozen=True)
class LevelFamilies:
    k: int
    L: tuple[frozenset, ...]
    I: tuple[frozenset, ...] = field(default=())

    @classmethod
    def build(cls, k: int, L_levels: Iterable[Iterable[Iterable[int]]],
              I_levels: Iterable[Iterable[Iterable[int]]] = ()) -> LevelFamilies:
        return cls(k, _freeze(L_levels), _freeze(I_levels))

    def L_at(self, p: int) -> frozenset:
        return self.L[p] if p < len(self.L) else frozenset()

    def I_at(self, p: int) -> frozenset:
        return self.I[p] if p < len(self.I) else frozenset()

    def sizes(self) -> tuple[list[int], list[int]]:
        return [len(x) for x in self.L], [len(x) for x in self.I]

    def has_side_information(self) -> bool:
        return any(self.L[1:]) or any(self.I[1:])

    def project(self, x: int) -> LevelFamilies:
        """Plain projection: every level restricted to sets starting with x, x dropped."""
        def proj(levels):
            return tuple(frozenset(s[1:] for s in lev if s[0] == x) for lev in levels)
        return LevelFamilies(self.k - 1, proj(self.L), proj(self.I))

    def split(self) -> dict[int, LevelFamilies]:
        """Child families for every smallest item x of L_k, in one sweep.

        A child keeps the usual projections (patterns starting with x, x
        dropped).  Its infrequent levels additionally take over known
        infrequent sets lying entirely above x, one level up, whenever such
        a set would otherwise be counted in the child: every real candidate
        starting with x avoids them, so excluding them there stays sound.
        """
        b = self.k - 1
        nL, nI = len(self.L), len(self.I)
        Lg: dict[int, list[list]] = defaultdict(lambda: [[] for _ in range(nL)])
        Ig: dict[int, list[list]] = defaultdict(lambda: [[] for _ in range(nI)])
        for j, lev in enumerate(self.L):
            for s in lev:
                Lg[s[0]][j].append(s[1:])
        for j, lev in enumerate(self.I):
            for s in lev:
                Ig[s[0]][j].append(s[1:])
        # parent infrequent sets by level, sorted on smallest item for the x filter
        above = [sorted(lev) for lev in self.I]
        tops = sorted({s[0] for s in self.L_at(0)})
        out = {}
        for x in tops:
            Lx = tuple(frozenset(v) for v in Lg[x])
            base = Lx[0]
            width = nI + 1 if nI else 0
            Ix = [set(Ig[x][j]) if j < nI else set() for j in range(width)]
            for j in range(1, width):
                known = Lx[j] if j < nL else frozenset()
                for t in above[j - 1]:
                    if t[0] <= x or t in Ix[j] or t in known:
                        continue
                    if _absorbs(t, b, j, base, Ix):
                        Ix[j].add(t)
            while Ix and not Ix[-1]:
                Ix.pop()
            out[x] = LevelFamilies(b, Lx, tuple(frozenset(v) for v in Ix))
        return out


def _absorbs(t: ItemSet, b: int, j: int, base: frozenset, Ix: list[set]) -> bool:
    # t counts among the child's (b+j)-candidates: all b-subsets frequent,
    # and no smaller infrequent child set inside it already
    if not all(v in base for v in combinations(t, b)):
        return False
    for i in range(1, j):
        lev = Ix[i]
        if not lev:
            continue
        size = b + i
        if binomial(len(t), size) <= len(lev):
            if any(u in lev for u in combinations(t, size)):
                return False
        else:
            st = set(t)
            if any(st.issuperset(u) for u in lev):
                return False
    return True


@dataclass(frozen=True)
class Violation:
    kind: str
    level: int
    pattern: ItemSet
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at level {self.level}: {self.pattern} {self.detail}"


def validate(fam: LevelFamilies) -> Violation | None:
    """First broken precondition of the families, or None when all hold."""
    k = fam.k
    for name, levels in (("L", fam.L), ("I", fam.I)):
        for p, lev in enumerate(levels):
            for s in sorted(lev):
                if len(s) != k + p:
                    return Violation("size", k + p, s, f"in {name}_{k + p} has size {len(s)}")
    for p in range(1, max(len(fam.L), len(fam.I))):
        below = fam.L_at(p - 1)
        for name, lev in (("L", fam.L_at(p)), ("I", fam.I_at(p))):
            for s in sorted(lev):
                for sub in combinations(s, k + p - 1):
                    if sub not in below:
                        return Violation(
                            "closure", k + p, s,
                            f"in {name}_{k + p} has subset {sub} missing from L_{k + p - 1}")
    for p in range(min(len(fam.L), len(fam.I))):
        both = fam.L[p] & fam.I[p]
        if both:
            s = min(both)
            return Violation("overlap", k + p, s, f"is in both L_{k + p} and I_{k + p}")
    return None


# -- size-only bounds --------------------------------------------------------


def _at(seq: Sequence[int], i: int) -> int:
    return seq[i] if i < len(seq) else 0


def gkk_levels(sizes_L: Sequence[int], sizes_I: Sequence[int], k: int) -> tuple[int, ...]:
    """``(gKK^{k+1}, gKK^{k+2}, ...)`` with trailing zeros trimmed.

    Negative intermediate values clamp to 0.
    """
    n = _at(sizes_L, 0)
    horizon = len(kk_levels(n, k))
    out = []
    prev = 0
    for p in range(1, horizon + 1):
        if p == 1:
            v = kk_bound(n, k, 1)
        else:
            v = kk_bound(prev + _at(sizes_L, p - 1), k + p - 1, 1)
        v -= _at(sizes_L, p) + _at(sizes_I, p)
        prev = max(v, 0)
        out.append(prev)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def gkk_bound(sizes_L: Sequence[int], sizes_I: Sequence[int], k: int, p: int) -> int:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    levels = gkk_levels(sizes_L, sizes_I, k)
    return levels[p - 1] if p <= len(levels) else 0


def g_mu(sizes_L: Sequence[int], sizes_I: Sequence[int], k: int) -> int:
    """Largest size that can still hold a candidate.

    This is ``k`` plus the last offset with a nonzero bound.  When the
    bound sequence has no interior zeros it equals ``k + min{p: gKK = 0} - 1``.
    """
    if _at(sizes_L, 0) == 0:
        return k - 1
    return k + len(gkk_levels(sizes_L, sizes_I, k))


def gkk_total(sizes_L: Sequence[int], sizes_I: Sequence[int], k: int) -> int:
    return sum(gkk_levels(sizes_L, sizes_I, k))


# -- structural bounds --------------------------------------------------------


def _checked(fam: LevelFamilies) -> None:
    bad = validate(fam)
    if bad is not None:
        raise ValueError(f"invalid level families: {bad}")


def gkk_star_levels(fam: LevelFamilies, check: bool = True) -> tuple[int, ...]:
    """``(gKK*_{k+1}, gKK*_{k+2}, ...)`` with trailing zeros trimmed.

    ``check`` runs :func:`validate` first and raises ``ValueError`` on a
    broken precondition; callers that build valid families can skip it.
    """
    if check:
        _checked(fam)
    return _gkk_star_levels(fam)


def _gkk_star_levels(fam: LevelFamilies) -> tuple[int, ...]:
    sizes_L, sizes_I = fam.sizes()
    top = gkk_levels(sizes_L, sizes_I, fam.k)
    if fam.k == 1 or not top:
        return top
    summed: list[int] = []
    for sub in fam.split().values():
        child = _gkk_star_levels(sub)
        if len(child) > len(summed):
            summed.extend([0] * (len(child) - len(summed)))
        for i, v in enumerate(child):
            summed[i] += v
    out = [min(cap, _at(summed, i)) for i, cap in enumerate(top)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def gkk_star(fam: LevelFamilies, p: int, check: bool = True) -> int:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    levels = gkk_star_levels(fam, check)
    return levels[p - 1] if p <= len(levels) else 0


def g_mu_star(fam: LevelFamilies, check: bool = True) -> int:
    if not fam.L_at(0):
        return fam.k - 1
    return fam.k + len(gkk_star_levels(fam, check))


def gkk_star_total(fam: LevelFamilies, check: bool = True) -> int:
    return sum(gkk_star_levels(fam, check))


# -- candidate sets by recursion ----------------------------------------------


def gen_candidates(fam: LevelFamilies, p: int) -> set[ItemSet]:
    """Generalized (k+p)-candidates built level by level with join/prune.

    Level one is the plain candidate set of L_k minus what is already known
    at k+1; each further level takes the candidates of (previous generalized
    candidates together with L at that size), minus the known sets.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    current = candidates_of(fam.L_at(0)) - fam.L_at(1) - fam.I_at(1)
    for j in range(2, p + 1):
        current = candidates_of(current | fam.L_at(j - 1)) - fam.L_at(j) - fam.I_at(j)
    return current
