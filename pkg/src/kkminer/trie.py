"""Prefix trie of itemsets and the bounds that read its structure.

Every root-to-node path is a strictly increasing item sequence, so a node at
depth d stands for one d-itemset.  The subtrie under a top-level child ``x``
holds exactly the patterns whose smallest item is ``x`` with ``x`` stripped,
which is what the recursive bounds (KK*, mu*, obvious) walk over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Union

from .combinatorics import binomial, kk_levels

ItemSet = tuple[int, ...]


class Node:
    __slots__ = ("item", "children", "support")

    def __init__(self, item: int = -1):
        self.item = item
        self.children: dict[int, Node] = {}
        self.support = 0

    def child(self, item: int) -> Node:
        node = self.children.get(item)
        if node is None:
            node = Node(item)
            kids = self.children
            if kids and item < next(reversed(kids)):
                kids[item] = node
                # keep dense-id order for traversal
                self.children = dict(sorted(kids.items()))
            else:
                kids[item] = node
        return node

    def __repr__(self) -> str:
        return f"Node({self.item}, children={len(self.children)}, support={self.support})"


@dataclass
class BoundSet:
    """Bounds for one k-family.  Level lists start at k+1 and end at the last nonzero."""

    k: int
    size: int
    kk: tuple[int, ...]
    kk_star: tuple[int, ...]
    obvious: int

    @property
    def mu(self) -> int:
        return self.k - 1 if self.size == 0 else self.k + len(self.kk)

    @property
    def mu_star(self) -> int:
        return self.k - 1 if self.size == 0 else self.k + len(self.kk_star)

    @property
    def kk_total(self) -> int:
        return sum(self.kk)

    @property
    def kk_star_total(self) -> int:
        return sum(self.kk_star)

    def kk_at(self, p: int) -> int:
        return self.kk[p - 1] if p <= len(self.kk) else 0

    def kk_star_at(self, p: int) -> int:
        return self.kk_star[p - 1] if p <= len(self.kk_star) else 0


@dataclass(frozen=True)
class TrieView:
    """The family of k-itemsets hanging below ``node`` (paths of length k)."""

    node: Node
    k: int
    owner: PatternTrie | None = field(default=None, compare=False, repr=False)

    def __iter__(self) -> Iterator[ItemSet]:
        return iter_depth(self.node, self.k)

    def __len__(self) -> int:
        return count_depth(self.node, self.k)

    def items(self) -> list[int]:
        return list(self.node.children)


class PatternTrie:
    """Itemset trie; ``k`` is the level the bound functions look at.

    Bounds are evaluated in one depth-first pass and cached until the next
    mutation through ``insert``, ``prune_level`` or ``set_level``.
    """

    def __init__(self, k: int = 0):
        self.root = Node()
        self.k = k
        self._cache: dict[tuple[int, int], BoundSet] = {}

    @classmethod
    def from_itemsets(cls, sets: Iterable[Iterable[int]]) -> PatternTrie:
        trie = cls()
        k = None
        for s in sets:
            s = tuple(sorted(set(s)))
            if k is None:
                k = len(s)
            elif len(s) != k:
                raise ValueError(f"mixed pattern sizes {k} and {len(s)}")
            trie.insert(s)
        trie.k = k or 0
        return trie

    def insert(self, s: ItemSet) -> Node:
        node = self.root
        for item in s:
            node = node.child(item)
        self.k = max(self.k, len(s))
        self._cache.clear()
        return node

    def set_level(self, k: int) -> None:
        self.k = k
        self._cache.clear()

    def touch(self) -> None:
        self._cache.clear()

    def find(self, s: Iterable[int]) -> Node | None:
        node = self.root
        for item in s:
            node = node.children.get(item)
            if node is None:
                return None
        return node

    def __contains__(self, s: Iterable[int]) -> bool:
        return self.find(s) is not None

    def view(self, k: int | None = None) -> TrieView:
        return TrieView(self.root, self.k if k is None else k, self)

    def level(self, k: int | None = None) -> list[ItemSet]:
        return list(iter_depth(self.root, self.k if k is None else k))

    def __len__(self) -> int:
        return count_depth(self.root, self.k)

    def node_count(self, max_depth: int | None = None) -> int:
        """Nodes below the root down to ``max_depth`` (default: current level)."""
        limit = self.k if max_depth is None else max_depth
        total = 0
        stack = [(self.root, 0)]
        while stack:
            node, d = stack.pop()
            if d == limit:
                continue
            for c in node.children.values():
                total += 1
                stack.append((c, d + 1))
        return total

    def prune_level(self, depth: int, minsup: int, strict: bool = False) -> list[ItemSet]:
        """Drop depth-``depth`` nodes whose support misses the threshold.

        Returns the removed itemsets in trie order.
        """
        removed: list[ItemSet] = []

        def keep(n: Node) -> bool:
            return n.support > minsup if strict else n.support >= minsup

        for prefix, parent in iter_prefixed(self.root, depth - 1):
            kids = parent.children
            dead = [item for item, n in kids.items() if not keep(n)]
            for item in dead:
                del kids[item]
                removed.append(prefix + (item,))
        self._cache.clear()
        return removed

    def drop_below(self, depth: int) -> None:
        """Remove every node deeper than ``depth``."""
        for node in iter_nodes_at(self.root, depth):
            node.children.clear()
        self.k = min(self.k, depth)
        self._cache.clear()

    def bounds(self, k: int | None = None) -> BoundSet:
        k = self.k if k is None else k
        key = (id(self.root), k)
        hit = self._cache.get(key)
        if hit is None:
            hit = compute_bounds(self.root, k)
            self._cache[key] = hit
        return hit


Family = Union[PatternTrie, TrieView]


def _as_view(family: Family) -> TrieView:
    return family.view() if isinstance(family, PatternTrie) else family


def iter_nodes_at(node: Node, depth: int) -> Iterator[Node]:
    if depth == 0:
        yield node
        return
    stack = [(node, 0)]
    while stack:
        n, d = stack.pop()
        if d + 1 == depth:
            yield from n.children.values()
        else:
            stack.extend((c, d + 1) for c in reversed(n.children.values()))


def iter_prefixed(node: Node, depth: int, prefix: ItemSet = ()) -> Iterator[tuple[ItemSet, Node]]:
    if depth == 0:
        yield prefix, node
        return
    for item, child in list(node.children.items()):
        yield from iter_prefixed(child, depth - 1, prefix + (item,))


def iter_depth(node: Node, depth: int, prefix: ItemSet = ()) -> Iterator[ItemSet]:
    """Itemsets of the paths of exactly ``depth`` edges below ``node``, in order."""
    if depth == 0:
        yield prefix
        return
    for item, child in node.children.items():
        yield from iter_depth(child, depth - 1, prefix + (item,))


def count_depth(node: Node, depth: int) -> int:
    if depth == 0:
        return 1
    if depth == 1:
        return len(node.children)
    return sum(count_depth(c, depth - 1) for c in node.children.values())


# -- bounds -----------------------------------------------------------------


def _node_bounds(node: Node, j: int) -> tuple[int, tuple[int, ...], int]:
    # (family size, KK* levels, obvious) for the j-family below node
    if j == 1:
        n = len(node.children)
        return n, tuple(binomial(n, p + 1) for p in range(1, n)), binomial(n, 2)
    n = 0
    obvious = 0
    summed: list[int] = []
    for child in node.children.values():
        cn, cstar, cob = _node_bounds(child, j - 1)
        if cn == 0:
            continue
        n += cn
        obvious += cob
        if len(cstar) > len(summed):
            summed.extend([0] * (len(cstar) - len(summed)))
        for i, v in enumerate(cstar):
            summed[i] += v
    kk = kk_levels(n, j) if n else ()
    star = []
    for i, cap in enumerate(kk):
        if i >= len(summed):
            break
        v = summed[i] if summed[i] < cap else cap
        if v == 0:
            break
        star.append(v)
    return n, tuple(star), obvious


def compute_bounds(node: Node, k: int) -> BoundSet:
    """Depth-first evaluation of every trie bound for the k-family below ``node``."""
    if k < 1:
        raise ValueError(f"level must be positive, got {k}")
    n, star, obvious = _node_bounds(node, k)
    return BoundSet(k=k, size=n, kk=kk_levels(n, k), kk_star=star, obvious=obvious)


def family_bounds(family: Family) -> BoundSet:
    if isinstance(family, PatternTrie):
        return family.bounds()
    if family.owner is not None:
        cached = family.owner._cache.get((id(family.node), family.k))
        if cached is not None:
            return cached
    result = compute_bounds(family.node, family.k)
    if family.owner is not None:
        family.owner._cache[(id(family.node), family.k)] = result
    return result


def project(family: Family, x: int) -> TrieView:
    """Patterns with smallest item ``x``, with ``x`` removed."""
    view = _as_view(family)
    child = view.node.children.get(x)
    if child is None:
        return TrieView(Node(), view.k - 1)
    return TrieView(child, view.k - 1, view.owner)


def kk_star(family: Family, p: int) -> int:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    return family_bounds(family).kk_star_at(p)


def mu_star(family: Family) -> int:
    return family_bounds(family).mu_star


def kk_star_total(family: Family) -> int:
    return family_bounds(family).kk_star_total


def obvious_bound(family: Family) -> int:
    """Join-only count of (k+1)-candidates, ignoring the prune step."""
    return family_bounds(family).obvious


# -- candidate generation ---------------------------------------------------


def _shadow_parents(trie: PatternTrie, prefix: ItemSet) -> list[Node] | None:
    # for each i, the node reached by prefix minus prefix[i]; None if one is missing
    out = []
    for i in range(len(prefix)):
        node = trie.find(prefix[:i] + prefix[i + 1:])
        if node is None:
            return None
        out.append(node)
    return out


def _walk_join(trie: PatternTrie, k: int, emit) -> None:
    # visit every joined pair at depth k that survives the prune step
    stack: list[tuple[Node, ItemSet]] = [(trie.root, ())]
    while stack:
        node, prefix = stack.pop()
        if len(prefix) < k - 1:
            for item, child in reversed(node.children.items()):
                stack.append((child, prefix + (item,)))
            continue
        leaves = list(node.children.items())
        if len(leaves) < 2:
            continue
        shadows = _shadow_parents(trie, prefix)
        if shadows is None:
            continue
        for ia in range(len(leaves) - 1):
            a, leaf_a = leaves[ia]
            # the k-subsets that keep a and drop one prefix item
            subs_a = []
            for sh in shadows:
                n = sh.children.get(a)
                if n is None:
                    break
                subs_a.append(n)
            else:
                for ib in range(ia + 1, len(leaves)):
                    b = leaves[ib][0]
                    for n in subs_a:
                        if b not in n.children:
                            break
                    else:
                        emit(prefix, leaf_a, a, b)


def generate_candidates(trie: PatternTrie, k: int | None = None, insert: bool = False) -> list[ItemSet]:
    """(k+1)-candidates of the depth-k family: join on shared (k-1)-prefix, then prune.

    With ``insert=True`` the candidates are also added to the trie as
    children of their depth-k leaf (support 0) and the trie level moves up.
    """
    k = trie.k if k is None else k
    out: list[ItemSet] = []
    if k < 1:
        return out

    if insert:
        def emit(prefix, leaf, a, b):
            out.append(prefix + (a, b))
            leaf.child(b)
    else:
        def emit(prefix, leaf, a, b):
            out.append(prefix + (a, b))

    _walk_join(trie, k, emit)
    if insert:
        trie.set_level(k + 1)
    return out


def count_candidates(trie: PatternTrie, k: int | None = None) -> int:
    """``len(generate_candidates(trie, k))`` without building the list."""
    k = trie.k if k is None else k
    total = 0

    def emit(prefix, leaf, a, b):
        nonlocal total
        total += 1

    if k >= 1:
        _walk_join(trie, k, emit)
    return total


def candidates_of(sets: Iterable[ItemSet]) -> set[ItemSet]:
    """Join/prune candidates of an explicit family of equal-size sets."""
    sets = list(sets)
    if not sets:
        return set()
    trie = PatternTrie.from_itemsets(sets)
    return set(generate_candidates(trie))
