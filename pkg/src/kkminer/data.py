"""Transaction files and the item dictionary.

Input is plain text, one transaction per line, whitespace-separated
nonnegative integer labels (the FIMI layout used by mushroom.dat and
friends).  Internally items get dense ids; with ``reorder`` the rarest item
gets id 0 so the recursive bounds lose as little as possible.
"""

from __future__ import annotations

import io
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Union

ItemSet = tuple[int, ...]


class TransactionParseError(ValueError):
    def __init__(self, line_no: int, token: str, source: str = "<input>"):
        super().__init__(f"{source}:{line_no}: not a nonnegative integer item: {token!r}")
        self.line_no = line_no
        self.token = token
        self.source = source


@dataclass
class TransactionDB:
    transactions: list[ItemSet]
    labels: list[int]  # dense id -> raw label
    counts: dict[int, int] = field(default_factory=dict)  # raw label -> support

    def __len__(self) -> int:
        return len(self.transactions)

    @property
    def ids(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def decode(self, s: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.labels[i] for i in s))

    def encode(self, labels: Iterable[int]) -> ItemSet:
        ids = self.ids
        return tuple(sorted(ids[x] for x in labels))


def parse_lines(lines: Iterable[str], source: str = "<input>") -> list[tuple[int, ...]]:
    out = []
    for no, line in enumerate(lines, 1):
        toks = line.split()
        if not toks:
            continue
        row = set()
        for tok in toks:
            if not tok.isdigit():
                raise TransactionParseError(no, tok, source)
            row.add(int(tok))
        out.append(tuple(sorted(row)))
    return out


Source = Union[str, os.PathLike, IO[str], IO[bytes]]


def load_transactions(source: Source, reorder: bool = False) -> TransactionDB:
    """Read a transaction file (path or open stream) into a dense-id database."""
    if isinstance(source, (str, os.PathLike)):
        name = os.fspath(source)
        with open(name, encoding="ascii", errors="replace") as fh:
            raw = parse_lines(fh, name)
    else:
        stream = source
        if isinstance(stream, (io.BufferedIOBase, io.RawIOBase)) or "b" in getattr(stream, "mode", ""):
            stream = io.TextIOWrapper(stream, encoding="ascii", errors="replace")
        raw = parse_lines(stream, getattr(source, "name", "<input>"))
    return from_raw(raw, reorder=reorder)


def from_raw(raw: Iterable[Iterable[int]], reorder: bool = False) -> TransactionDB:
    rows = [tuple(sorted(set(r))) for r in raw]
    rows = [r for r in rows if r]
    counts = Counter(x for r in rows for x in r)
    labels = sorted(counts)
    dense = {lab: i for i, lab in enumerate(labels)}
    db = TransactionDB([tuple(dense[x] for x in r) for r in rows], labels, dict(counts))
    return assign_ids(db, reorder) if reorder else db


def assign_ids(db: TransactionDB, reorder: bool) -> TransactionDB:
    """Re-number items; reorder puts less frequent items first, ties by label."""
    counts = db.counts
    if reorder:
        labels = sorted(counts, key=lambda lab: (counts[lab], lab))
    else:
        labels = sorted(counts)
    old = db.labels
    new_id = {lab: i for i, lab in enumerate(labels)}
    rows = [tuple(sorted(new_id[old[i]] for i in t)) for t in db.transactions]
    return TransactionDB(rows, labels, dict(counts))
