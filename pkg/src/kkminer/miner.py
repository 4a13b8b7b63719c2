"""Levelwise frequent-pattern miner with per-pass candidate bounds.

The loop is the classic one: count, prune, join.  After each pass it also
evaluates the configured upper bounds on the number of candidates still to
come.  They serve two purposes.  A zero bound ends the run without another
join.  A small total lets all remaining levels be generated at once and
counted in a single scan ("combining").
"""

from __future__ import annotations

import csv
import io
import os
import time
from dataclasses import dataclass, field
from typing import IO, Iterable, Union

from .counting import BitmapIndex, count_bitmap, count_scan
from .data import TransactionDB
from .generalized import LevelFamilies, gkk_levels, gkk_star_levels
from .oracle import colex_key
from .trie import ItemSet, PatternTrie, generate_candidates, iter_depth

BOUND_KINDS = ("kk", "kk_star", "gkk", "gkk_star")
COUNTERS = ("bitmap", "scan")

STATS_HEADER = (
    "level", "freq_count", "actual_next", "kk_next", "kkstar_next", "gkkstar_next",
    "mu", "mu_star", "kk_total", "kkstar_total", "gkkstar_total", "bound_ms", "pass_ms",
)


@dataclass
class MinerConfig:
    minsup: int
    reorder: bool = True
    bound_kind: str = "gkk_star"
    combine_limit: int | None = None
    stats_path: str | None = None
    strict: bool = False  # support > minsup instead of >=
    memory_budget: int | None = None  # max candidates materialized by one combine
    counter: str = "bitmap"

    def __post_init__(self):
        if self.minsup < 1:
            raise ValueError(f"minsup must be at least 1, got {self.minsup}")
        if self.bound_kind not in BOUND_KINDS:
            raise ValueError(f"unknown bound kind {self.bound_kind!r}; pick one of {BOUND_KINDS}")
        if self.combine_limit is not None and self.combine_limit < 0:
            raise ValueError(f"combine_limit must be nonnegative, got {self.combine_limit}")
        if self.memory_budget is not None and self.memory_budget < 0:
            raise ValueError(f"memory_budget must be nonnegative, got {self.memory_budget}")
        if self.counter not in COUNTERS:
            raise ValueError(f"unknown counter {self.counter!r}; pick one of {COUNTERS}")


@dataclass
class BoundReport:
    """One stats row.  ``None`` marks a bound the configuration did not compute."""

    level: int
    freq_count: int
    actual_next: int = 0
    kk_next: int = 0
    kkstar_next: int | None = None
    gkkstar_next: int | None = None
    mu: int = 0
    mu_star: int | None = None
    kk_total: int = 0
    kkstar_total: int | None = None
    gkkstar_total: int | None = None
    bound_ms: float = 0.0
    pass_ms: float = 0.0
    node_count: int = field(default=0, compare=False)
    # size-only generalized bound; drives decisions for bound_kind "gkk", not written to CSV
    gkk_next: int | None = field(default=None, compare=False)
    gkk_total: int | None = field(default=None, compare=False)

    @property
    def ratio(self) -> float | None:
        """KK*_{k+1} over the actual candidate count (None when undefined)."""
        if self.kkstar_next is None or self.actual_next == 0:
            return None
        return self.kkstar_next / self.actual_next

    def row(self) -> list[str]:
        out = []
        for name in STATS_HEADER:
            v = getattr(self, name)
            if v is None:
                out.append("")
            elif isinstance(v, float):
                out.append(f"{v:.3f}")
            else:
                out.append(str(v))
        return out


@dataclass
class MiningResult:
    patterns: dict[ItemSet, int]  # raw-label itemset -> support
    reports: list[BoundReport]
    passes: int
    combined_at: int | None = None  # level after which the remaining levels were combined
    fell_back: bool = False  # a combine attempt broke the memory budget

    def sorted_patterns(self) -> list[tuple[ItemSet, int]]:
        return sorted(self.patterns.items(), key=lambda kv: (len(kv[0]), colex_key(kv[0])))


class _Counter:
    def __init__(self, db: TransactionDB, kind: str, items: Iterable[int]):
        self.db = db
        self.index = BitmapIndex(db, items) if kind == "bitmap" else None

    def __call__(self, trie: PatternTrie, lo: int, hi: int) -> None:
        if self.index is not None:
            count_bitmap(self.index, trie, lo, hi)
        else:
            count_scan(self.db, trie, lo, hi)


def count_level(db: TransactionDB, trie: PatternTrie, k: int, minsup: int | None = None,
                counter: str = "scan", strict: bool = False) -> dict[ItemSet, int]:
    """One pass over ``db`` counting the depth-k candidates of ``trie``.

    Returns the supports by itemset (dense ids).  With ``minsup`` the
    infrequent candidates are pruned from the trie afterwards.
    """
    _Counter(db, counter, range(len(db.labels)))(trie, k, k)
    supports = {}
    stack = [(trie.root, ())]
    while stack:
        node, s = stack.pop()
        if len(s) == k:
            supports[s] = node.support
            continue
        stack.extend((c, s + (c.item,)) for c in node.children.values())
    if minsup is not None:
        trie.prune_level(k, minsup, strict)
    return supports


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


class _Run:
    def __init__(self, db: TransactionDB, config: MinerConfig):
        self.db = db
        self.cfg = config
        self.trie = PatternTrie(1)
        self.reports: list[BoundReport] = []
        self.passes = 0
        self.fell_back = False
        self.combined_at: int | None = None
        # frozen copies of the two latest frequent levels and the latest infrequent one
        self.prev_L: frozenset = frozenset()
        self.cur_L: frozenset = frozenset()
        self.cur_I: frozenset = frozenset()

    def keep(self, support: int) -> bool:
        m = self.cfg.minsup
        return support > m if self.cfg.strict else support >= m

    # -- bounds --------------------------------------------------------------

    def _side_levels(self, k: int) -> tuple[int, ...] | None:
        # generalized bound sequence seen from level k-1, offsets 2.. (sizes k+1..)
        if k < 2 or not self.prev_L:
            return None
        fam = LevelFamilies(k - 1, (self.prev_L, self.cur_L), (frozenset(), self.cur_I))
        if self.cfg.bound_kind == "gkk_star":
            levels = gkk_star_levels(fam, check=False)
        else:
            levels = gkk_levels([len(self.prev_L), len(self.cur_L)], [0, len(self.cur_I)], k - 1)
        return levels[1:]

    def report(self, k: int) -> BoundReport:
        kind = self.cfg.bound_kind
        t0 = time.perf_counter()
        b = self.trie.bounds(k)
        rep = BoundReport(level=k, freq_count=b.size, kk_next=b.kk_at(1), mu=b.mu,
                          kk_total=b.kk_total)
        if kind in ("kk_star", "gkk_star"):
            rep.kkstar_next = b.kk_star_at(1)
            rep.mu_star = b.mu_star
            rep.kkstar_total = b.kk_star_total
        if kind in ("gkk", "gkk_star"):
            own = b.kk_star if kind == "gkk_star" else b.kk
            side = self._side_levels(k)
            if side is None:
                seq = own
            else:
                width = max(len(own), len(side))
                seq = tuple(min(own[i] if i < len(own) else 0, side[i] if i < len(side) else 0)
                            for i in range(width))
            nxt = seq[0] if seq else 0
            # per-level minimum of two sound bounds, so the sum is sound too
            tot = sum(seq)
            if kind == "gkk_star":
                rep.gkkstar_next, rep.gkkstar_total = nxt, tot
            else:
                rep.gkk_next, rep.gkk_total = nxt, tot
        rep.bound_ms = _ms(t0)
        rep.node_count = self.trie.node_count(k)
        return rep

    def next_bound(self, rep: BoundReport) -> int:
        kind = self.cfg.bound_kind
        if kind == "kk":
            return rep.kk_next
        if kind == "kk_star":
            return rep.kkstar_next
        if kind == "gkk":
            return rep.gkk_next
        return rep.gkkstar_next

    def total_bound(self, rep: BoundReport) -> int:
        kind = self.cfg.bound_kind
        if kind == "kk":
            return rep.kk_total
        if kind == "kk_star":
            return rep.kkstar_total
        if kind == "gkk":
            return rep.gkk_total
        return rep.gkkstar_total

    # -- passes --------------------------------------------------------------

    def first_pass(self) -> None:
        t0 = time.perf_counter()
        support = [0] * len(self.db.labels)
        for t in self.db.transactions:
            for x in t:
                support[x] += 1
        self.passes += 1
        removed = []
        for item, s in enumerate(support):
            if self.keep(s):
                self.trie.root.child(item).support = s
            else:
                removed.append((item,))
        self.trie.set_level(1)
        self.cur_L = frozenset((x,) for x in self.trie.root.children)
        self.cur_I = frozenset(removed)
        self.count = _Counter(self.db, self.cfg.counter, self.trie.root.children)
        self.first_ms = _ms(t0)

    def level_pass(self, k: int) -> float:
        # candidates of size k are in the trie; count and prune them
        t0 = time.perf_counter()
        self.count(self.trie, k, k)
        self.passes += 1
        removed = self.trie.prune_level(k, self.cfg.minsup, self.cfg.strict)
        self.trie.set_level(k)
        self.prev_L = self.cur_L
        self.cur_L = frozenset(iter_depth(self.trie.root, k))
        self.cur_I = frozenset(removed)
        return _ms(t0)

    def try_combine(self, k: int) -> list[BoundReport] | None:
        """Generate every remaining level uncounted, count once, filter top-down.

        Returns the reports for the combined levels, or None after backing
        off because the memory budget was exceeded.
        """
        budget = self.cfg.memory_budget
        trie = self.trie
        made = 0
        depth = k
        sizes = []
        while True:
            new = generate_candidates(trie, depth, insert=True)
            if not new:
                break
            made += len(new)
            sizes.append(len(new))
            depth += 1
            if budget is not None and made > budget:
                trie.drop_below(k)
                trie.set_level(k)
                self.fell_back = True
                return None
        top = depth
        t0 = time.perf_counter()
        if top > k:
            self.count(trie, k + 1, top)
            self.passes += 1
        pass_ms = _ms(t0)
        self.combined_at = k
        self.reports[-1].actual_next = sizes[0] if sizes else 0

        out = []
        for j in range(k + 1, top + 1):
            # a j-set survives if frequent itself and every (j-1)-subset survived
            removed = trie.prune_level(j, self.cfg.minsup, self.cfg.strict)
            dead = []
            for s in list(iter_depth(trie.root, j)):
                if any(s[:i] + s[i + 1:] not in trie for i in range(j - 1)):
                    dead.append(s)
            for s in dead:
                parent = trie.find(s[:-1])
                del parent.children[s[-1]]
            trie.touch()
            self.prev_L = self.cur_L
            self.cur_L = frozenset(iter_depth(trie.root, j))
            self.cur_I = frozenset(removed) | frozenset(dead)
            trie.set_level(j)
            rep = self.report(j)
            rep.pass_ms = pass_ms if j == k + 1 else 0.0
            rep.actual_next = sizes[j - k] if j - k < len(sizes) else 0
            out.append(rep)
            if not self.cur_L:
                trie.drop_below(j)
                break
        return out

    def run(self) -> MiningResult:
        if not self.db.transactions:
            return MiningResult({}, [], 0)
        self.first_pass()
        pass_ms = self.first_ms
        k = 1
        while True:
            rep = self.report(k)
            rep.pass_ms = pass_ms
            self.reports.append(rep)
            if rep.freq_count == 0 or self.next_bound(rep) == 0:
                break
            limit = self.cfg.combine_limit
            if limit is not None and not self.fell_back and self.total_bound(rep) <= limit:
                combined = self.try_combine(k)
                if combined is not None:
                    self.reports.extend(combined)
                    break
            cands = generate_candidates(self.trie, k, insert=True)
            rep.actual_next = len(cands)
            if not cands:
                break
            k += 1
            pass_ms = self.level_pass(k)
        return MiningResult(self.collect(), self.reports, self.passes,
                            self.combined_at, self.fell_back)

    def collect(self) -> dict[ItemSet, int]:
        out = {}
        labels = self.db.labels
        stack = [(c, (c.item,)) for c in self.trie.root.children.values()]
        while stack:
            node, s = stack.pop()
            out[tuple(sorted(labels[i] for i in s))] = node.support
            stack.extend((c, s + (c.item,)) for c in node.children.values())
        return out


def mine(db: TransactionDB, config: MinerConfig) -> MiningResult:
    """Mine every frequent pattern of ``db``; item ids must already be assigned.

    Writes the stats CSV when ``config.stats_path`` is set.
    """
    result = _Run(db, config).run()
    if config.stats_path:
        write_stats(result.reports, config.stats_path)
    return result


Destination = Union[str, os.PathLike, IO[str]]


def write_stats(reports: Iterable[BoundReport], destination: Destination) -> None:
    if isinstance(destination, (str, os.PathLike)):
        path = os.fspath(destination)
        try:
            with open(path, "w", newline="") as fh:
                _write_stats(reports, fh)
        except OSError as exc:
            raise OSError(f"cannot write stats to {path}: {exc.strerror or exc}") from exc
    else:
        _write_stats(reports, destination)


def _write_stats(reports, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(STATS_HEADER)
    for r in reports:
        w.writerow(r.row())


def read_stats(source: Destination) -> list[dict[str, str]]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="") as fh:
            return list(csv.DictReader(fh))
    return list(csv.DictReader(source))


def format_patterns(result: MiningResult) -> str:
    buf = io.StringIO()
    for s, sup in result.sorted_patterns():
        buf.write(" ".join(map(str, s)))
        buf.write(f" ({sup})\n")
    return buf.getvalue()


def write_patterns(result: MiningResult, destination: Destination) -> None:
    text = format_patterns(result)
    if isinstance(destination, (str, os.PathLike)):
        path = os.fspath(destination)
        try:
            with open(path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write patterns to {path}: {exc.strerror or exc}") from exc
    else:
        destination.write(text)


__all__ = [
    "BOUND_KINDS", "BoundReport", "MinerConfig", "MiningResult", "STATS_HEADER",
    "count_level", "format_patterns", "mine", "read_stats", "write_patterns", "write_stats",
]
