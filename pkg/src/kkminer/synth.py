"""Quest-style synthetic basket data (the TxxIyyDzzzK family).

Follows the classic IBM generator recipe: a pool of weighted "potential"
patterns whose sizes are Poisson around ``avg_pattern``, consecutive patterns
sharing an exponentially distributed fraction of items, and transactions of
Poisson size filled by weighted draws from the pool with per-pattern
corruption.  Good enough to reproduce the shape of candidate counts on
T40I10D100K-like data, not a bit-exact clone of the original tool.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class QuestParams:
    n_transactions: int = 100_000
    avg_transaction: float = 40.0
    avg_pattern: float = 10.0
    n_items: int = 1000
    n_patterns: int = 2000
    correlation: float = 0.5
    corruption_mean: float = 0.5
    corruption_sd: float = 0.1
    seed: int = 0

    @property
    def name(self) -> str:
        d = self.n_transactions
        dz = f"{d // 1000}K" if d % 1000 == 0 else str(d)
        return f"T{self.avg_transaction:g}I{self.avg_pattern:g}D{dz}"


def _pattern_pool(p: QuestParams, rng: np.random.Generator) -> tuple[list[np.ndarray], np.ndarray, np.ndarray]:
    pool: list[np.ndarray] = []
    prev = np.empty(0, dtype=np.int64)
    for _ in range(p.n_patterns):
        size = max(1, int(rng.poisson(p.avg_pattern)))
        shared = min(len(prev), size, int(round(rng.exponential(p.correlation) * size)))
        keep = rng.choice(prev, size=shared, replace=False) if shared else np.empty(0, dtype=np.int64)
        chosen = set(keep.tolist())
        while len(chosen) < size:
            chosen.add(int(rng.integers(p.n_items)))
        prev = np.fromiter(sorted(chosen), dtype=np.int64)
        pool.append(prev)
    weights = rng.exponential(1.0, size=p.n_patterns)
    weights /= weights.sum()
    corruption = np.clip(rng.normal(p.corruption_mean, p.corruption_sd, size=p.n_patterns), 0.0, 1.0)
    return pool, weights, corruption


def generate(p: QuestParams) -> list[list[int]]:
    """Transactions as sorted item lists; deterministic in ``p.seed``."""
    rng = np.random.default_rng(p.seed)
    pool, weights, corruption = _pattern_pool(p, rng)
    sizes = np.maximum(1, rng.poisson(p.avg_transaction, size=p.n_transactions))
    # draw pattern ids in bulk; each transaction consumes what it needs
    stream = rng.choice(p.n_patterns, size=p.n_transactions * 8, p=weights)
    pos = 0
    carry: np.ndarray | None = None
    out = []
    for size in sizes:
        items: set[int] = set()
        while len(items) < size:
            if carry is not None:
                pat, carry = carry, None
            else:
                if pos == len(stream):
                    stream = rng.choice(p.n_patterns, size=len(stream), p=weights)
                    pos = 0
                j = int(stream[pos])
                pos += 1
                pat = pool[j]
                # corrupt: drop items while a uniform draw stays below the level
                c = corruption[j]
                drop = 0
                while drop < len(pat) and rng.random() < c:
                    drop += 1
                if drop:
                    pat = rng.choice(pat, size=len(pat) - drop, replace=False)
            if len(items) + len(pat) > size and items and rng.random() < 0.5:
                carry = pat
                break
            items.update(int(x) for x in pat)
        out.append(sorted(items))
    return out


def write(p: QuestParams, path) -> None:
    with open(path, "w") as fh:
        for t in generate(p):
            fh.write(" ".join(map(str, t)))
            fh.write("\n")
