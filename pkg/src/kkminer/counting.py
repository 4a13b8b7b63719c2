"""Support counting over a candidate trie.

Two interchangeable backends count every trie node whose depth lies in
``[lo, hi]``:

* ``scan``: the textbook pass, walking the trie once per transaction.
* ``bitmap``: the same pass over a column-packed copy of the database;
  each node's support is the popcount of the AND of its items' tid bitmaps,
  built incrementally along trie paths.

Both leave the result in ``node.support``.
"""

from __future__ import annotations

import numpy as np

from .data import TransactionDB
from .trie import Node, PatternTrie


def _reset(trie: PatternTrie, lo: int, hi: int) -> None:
    stack = [(trie.root, 0)]
    while stack:
        node, d = stack.pop()
        if d >= lo:
            node.support = 0
        if d < hi:
            stack.extend((c, d + 1) for c in node.children.values())


def count_scan(db: TransactionDB, trie: PatternTrie, lo: int, hi: int | None = None) -> None:
    hi = lo if hi is None else hi
    _reset(trie, lo, hi)
    root = trie.root

    def walk(node: Node, t: tuple[int, ...], start: int, depth: int) -> None:
        kids = node.children
        # a node at this depth still needs lo - depth more items to reach a target
        last = len(t) - max(lo - depth - 1, 0)
        for i in range(start, last):
            child = kids.get(t[i])
            if child is None:
                continue
            if depth + 1 >= lo:
                child.support += 1
            if depth + 1 < hi and child.children:
                walk(child, t, i + 1, depth + 1)

    for t in db.transactions:
        if len(t) >= lo:
            walk(root, t, 0, 0)


class BitmapIndex:
    """Per-item transaction bitmaps as Python ints (bit r set = item in row r)."""

    def __init__(self, db: TransactionDB, items=None):
        n = len(db.transactions)
        self.n = n
        lens = np.fromiter((len(t) for t in db.transactions), dtype=np.int64, count=n)
        flat = np.fromiter((x for t in db.transactions for x in t), dtype=np.int64,
                           count=int(lens.sum()))
        rows = np.repeat(np.arange(n, dtype=np.int64), lens)
        order = np.argsort(flat, kind="stable")
        flat = flat[order]
        rows = rows[order]
        wanted = None if items is None else set(items)
        bounds = np.searchsorted(flat, np.arange(len(db.labels) + 1))
        self.columns: dict[int, int] = {}
        buf = np.zeros(n, dtype=bool)
        for item in range(len(db.labels)):
            if wanted is not None and item not in wanted:
                continue
            tids = rows[bounds[item]:bounds[item + 1]]
            buf[:] = False
            buf[tids] = True
            packed = np.packbits(buf, bitorder="little")
            self.columns[item] = int.from_bytes(packed.tobytes(), "little")

    def support(self, items) -> int:
        acc = (1 << self.n) - 1
        for x in items:
            acc &= self.columns[x]
        return acc.bit_count()


def count_bitmap(index: BitmapIndex, trie: PatternTrie, lo: int, hi: int | None = None) -> None:
    hi = lo if hi is None else hi
    cols = index.columns
    full = (1 << index.n) - 1
    stack: list[tuple[Node, int, int]] = [(c, 1, full) for c in trie.root.children.values()]
    while stack:
        node, d, parent_tids = stack.pop()
        tids = parent_tids & cols[node.item]
        if d >= lo:
            node.support = tids.bit_count()
        if d < hi and node.children and tids:
            stack.extend((c, d + 1, tids) for c in node.children.values())
        elif d < hi:
            # empty tidset: every descendant has support 0
            for c in node.children.values():
                _zero(c, d + 1, lo, hi)


def _zero(node: Node, d: int, lo: int, hi: int) -> None:
    if d >= lo:
        node.support = 0
    if d < hi:
        for c in node.children.values():
            _zero(c, d + 1, lo, hi)
