"""Convert the LIBSVM-format agaricus (UCI mushroom) split into a transaction file.

The two halves shipped as ``agaricus_train.txt`` / ``agaricus_test.txt`` in
several ML packages (xgboost, xlearn demos) hold all 8124 mushrooms as one-hot
attribute indices plus a 0/1 class.  Each row becomes one transaction: the
attribute indices as items plus one class item.  That is the same
one-item-per-attribute-value encoding as the FIMI ``mushroom.dat`` benchmark,
so item supports and iteration counts carry over exactly.

    python scripts/make_mushroom.py agaricus_train.txt agaricus_test.txt -o data/mushroom.dat
"""

from __future__ import annotations

import argparse
from pathlib import Path

CLASS_BASE = 1000  # class items live above every attribute index


def convert(paths: list[Path]) -> list[list[int]]:
    rows = []
    for path in paths:
        for line in path.read_text().splitlines():
            toks = line.split()
            if not toks:
                continue
            label = int(float(toks[0]))
            items = sorted(int(t.split(":")[0]) for t in toks[1:])
            rows.append(items + [CLASS_BASE + label])
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("inputs", nargs="+", type=Path)
    ap.add_argument("-o", "--output", type=Path, default=Path("data/mushroom.dat"))
    args = ap.parse_args()
    rows = convert(args.inputs)
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text("".join(" ".join(map(str, r)) + "\n" for r in rows))
    items = {x for r in rows for x in r}
    print(f"{len(rows)} transactions, {len(items)} items -> {args.output}")


if __name__ == "__main__":
    main()
