"""Oracle sweeps: the bound implementations checked against brute force.

Each sweep returns a :class:`SweepResult` with the number of individual
checks run and a list of human-readable failures (empty when all hold).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .combinatorics import kk_bound, mu
from .generalized import LevelFamilies, gen_candidates, gkk_bound, gkk_star_levels, validate
from .oracle import brute_force_candidates, brute_force_gen_candidates, colex_family, maxsize
from .trie import PatternTrie, candidates_of, kk_star


@dataclass
class SweepResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, message: str) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(message)

    def __str__(self) -> str:
        return f"{self.name}: {self.checks - len(self.failures)}/{self.checks} passed"


def tightness_sweep(max_n: int = 200, max_k: int = 5, max_p: int = 4, min_k: int = 2) -> SweepResult:
    """Colex-initial families attain the KK bound and the mu bound exactly."""
    res = SweepResult("tightness")
    for k in range(min_k, max_k + 1):
        for n in range(1, max_n + 1):
            fam = colex_family(n, k)
            for p in range(1, max_p + 1):
                got = len(brute_force_candidates(fam, p))
                want = kk_bound(n, k, p)
                res.check(got == want, f"n={n} k={k} p={p}: |C|={got} but KK={want}")
            ms = maxsize(fam)
            res.check(ms == mu(n, k), f"n={n} k={k}: maxsize={ms} but mu={mu(n, k)}")
    return res


def random_families(rng: random.Random, k: int, n_items: int, n_patterns: int,
                    depth: int) -> LevelFamilies:
    """A random valid family stack: L_k plus ``depth`` levels of known sets.

    Each higher level draws its frequent and infrequent sets from the real
    candidates of the level below, so every closure precondition holds.
    """
    all_k = list(combinations(range(n_items), k))
    base = set(rng.sample(all_k, min(n_patterns, len(all_k))))
    rest = [s for s in all_k if s not in base]
    L_levels = [base]
    I_levels = [set(rng.sample(rest, min(rng.randint(0, 5), len(rest))))]
    prev = base
    for _ in range(depth):
        cands = sorted(candidates_of(prev)) if prev else []
        rng.shuffle(cands)
        a = rng.randint(0, len(cands))
        b = rng.randint(a, len(cands))
        L_levels.append(set(cands[:a]))
        I_levels.append(set(cands[a:b]) if rng.random() < 0.8 else set())
        prev = L_levels[-1]
    return LevelFamilies.build(k, L_levels, I_levels)


def _draw(rng: random.Random, max_items: int, max_patterns: int) -> LevelFamilies:
    k = rng.randint(1, 4)
    n_items = rng.randint(k + 1, max_items)
    return random_families(rng, k, n_items, rng.randint(1, max_patterns), rng.randint(0, 3))


def sandwich_sweep(n_families: int = 1000, seed: int = 0, max_items: int = 12,
                   max_patterns: int = 80, max_p: int = 4) -> SweepResult:
    """|C| <= KK* <= KK, and the generalized chains, on random families."""
    rng = random.Random(seed)
    res = SweepResult("sandwich")
    for trial in range(n_families):
        fam = _draw(rng, max_items, max_patterns)
        bad = validate(fam)
        res.check(bad is None, f"family {trial}: generator produced invalid input: {bad}")
        k = fam.k
        base = fam.L_at(0)
        trie = PatternTrie.from_itemsets(base)
        sizes_L, sizes_I = fam.sizes()
        g_star = gkk_star_levels(fam)
        for p in range(1, max_p + 1):
            tag = f"family {trial} k={k} p={p}"
            plain = len(brute_force_candidates(base, p))
            star = kk_star(trie, p)
            kk = kk_bound(len(base), k, p)
            res.check(plain <= star <= kk, f"{tag}: |C|={plain} KK*={star} KK={kk}")

            known = len(fam.L_at(p)) + len(fam.I_at(p))
            gen = len(brute_force_gen_candidates(fam.L, fam.I, k, p))
            gs = g_star[p - 1] if p <= len(g_star) else 0
            cap_star = max(0, star - known)
            res.check(gen <= gs <= cap_star,
                      f"{tag}: |C(L,I)|={gen} gKK*={gs} KK*-known={cap_star}")
            g = gkk_bound(sizes_L, sizes_I, k, p)
            cap = max(0, kk - known)
            res.check(gen <= g <= cap, f"{tag}: |C(L,I)|={gen} gKK={g} KK-known={cap}")
    return res


def recursion_sweep(n_instances: int = 200, seed: int = 1, max_items: int = 10,
                    max_patterns: int = 40, max_p: int = 3) -> SweepResult:
    """Level-by-level join/prune recursion equals direct enumeration."""
    rng = random.Random(seed)
    res = SweepResult("recursion")
    for trial in range(n_instances):
        fam = _draw(rng, max_items, max_patterns)
        for p in range(1, max_p + 1):
            direct = brute_force_gen_candidates(fam.L, fam.I, fam.k, p)
            rec = gen_candidates(fam, p)
            res.check(direct == rec,
                      f"instance {trial} p={p}: recursion {len(rec)} sets, direct {len(direct)}")
    return res
