"""Passes and wall time as the combine limit grows.

Each limit is one run; the first row is the plain levelwise run.  Every
combined run is checked against it pattern for pattern.

    python scripts/combine_sweep.py data/mushroom.dat 813 1000 10000 100000 400000
"""

from __future__ import annotations

import argparse
import time

from kkminer import MinerConfig, load_transactions, mine


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input")
    ap.add_argument("minsup", type=int)
    ap.add_argument("limits", type=int, nargs="+")
    args = ap.parse_args()

    db = load_transactions(args.input, reorder=True)
    t0 = time.perf_counter()
    base = mine(db, MinerConfig(minsup=args.minsup))
    print(f"{'limit':>10} {'passes':>6} {'combined@':>9} {'seconds':>8} identical")
    print(f"{'none':>10} {base.passes:>6} {'-':>9} {time.perf_counter() - t0:>8.1f} -")
    for limit in args.limits:
        t0 = time.perf_counter()
        res = mine(db, MinerConfig(minsup=args.minsup, combine_limit=limit))
        at = res.combined_at if res.combined_at is not None else "-"
        print(f"{limit:>10} {res.passes:>6} {at:>9} {time.perf_counter() - t0:>8.1f} "
              f"{res.patterns == base.patterns}")


if __name__ == "__main__":
    main()
