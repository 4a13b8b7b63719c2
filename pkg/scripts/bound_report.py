"""Per-level actual vs estimated candidate counts for one dataset.

Prints the data behind the "actual and estimated candidates", "total
remaining candidates" and "maximal candidate size" plots, one row per level.

    python scripts/bound_report.py data/mushroom.dat 813 [--no-reorder]
"""

from __future__ import annotations

import argparse

from kkminer import MinerConfig, load_transactions, mine


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input")
    ap.add_argument("minsup", type=int)
    ap.add_argument("--reorder", action=argparse.BooleanOptionalAction, default=True)
    ap.add_argument("--stats", default=None, help="also write the CSV here")
    args = ap.parse_args()

    db = load_transactions(args.input, reorder=args.reorder)
    res = mine(db, MinerConfig(minsup=args.minsup, reorder=args.reorder, stats_path=args.stats))
    print(f"{args.input}: {len(db)} transactions, {len(db.labels)} items, "
          f"{res.passes} passes, {len(res.patterns)} frequent patterns")
    head = ("k", "|L_k|", "|C_k+1|", "KK", "KK*", "gKK*", "KK*/actual", "mu", "mu*", "KK*_total")
    print(" ".join(f"{h:>11}" for h in head))
    for r in res.reports:
        ratio = f"{r.ratio:.3f}" if r.ratio is not None else "-"
        cells = (r.level, r.freq_count, r.actual_next, r.kk_next, r.kkstar_next, r.gkkstar_next,
                 ratio, r.mu, r.mu_star, r.kkstar_total)
        print(" ".join(f"{c:>11}" if len(str(c)) <= 11 else f"{float(c):>11.3g}" for c in cells))


if __name__ == "__main__":
    main()
