"""Write a Quest-style synthetic transaction file (default: T40I10D100K shape).

    python scripts/make_quest.py -o data/T40I10D100K.dat
"""

from __future__ import annotations

import argparse
import dataclasses

from kkminer.synth import QuestParams, write


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = QuestParams()
    for f in dataclasses.fields(QuestParams):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(getattr(defaults, f.name)),
                        default=getattr(defaults, f.name))
    ap.add_argument("-o", "--output", default=None)
    args = vars(ap.parse_args())
    out = args.pop("output")
    params = QuestParams(**args)
    path = out or f"data/{params.name}.dat"
    write(params, path)
    print(f"{params.n_transactions} transactions -> {path}")


if __name__ == "__main__":
    main()
