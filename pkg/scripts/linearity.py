"""Bound evaluation time against trie size, with a least-squares line.

Collects one (node count, bound ms) point per level from runs at several
thresholds and reports the fit; ``--plot`` saves a scatter with the line.

    python scripts/linearity.py data/mushroom.dat 813 1200 1600 2400 3200 4000
"""

from __future__ import annotations

import argparse

import numpy as np

from kkminer import MinerConfig, load_transactions, mine


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input")
    ap.add_argument("minsups", type=int, nargs="+")
    ap.add_argument("--plot", default=None, help="PNG path (needs matplotlib)")
    args = ap.parse_args()

    db = load_transactions(args.input, reorder=True)
    pts = []
    for ms in args.minsups:
        res = mine(db, MinerConfig(minsup=ms, bound_kind="kk_star"))
        pts += [(r.node_count, r.bound_ms) for r in res.reports]
    x = np.array([p[0] for p in pts], dtype=float)
    y = np.array([p[1] for p in pts], dtype=float)
    slope, icpt = np.polyfit(x, y, 1)
    r2 = 1 - ((y - (slope * x + icpt)) ** 2).sum() / ((y - y.mean()) ** 2).sum()
    print(f"{len(pts)} points, nodes {x.min():.0f}..{x.max():.0f}")
    print(f"bound_ms = {slope:.3e} * nodes + {icpt:.3f}   R^2 = {r2:.4f}")
    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        fig, ax = plt.subplots(figsize=(5, 4))
        ax.scatter(x, y, s=10)
        grid = np.linspace(0, x.max(), 50)
        ax.plot(grid, slope * grid + icpt, color="k", lw=1)
        ax.set_xlabel("trie nodes")
        ax.set_ylabel("bound time (ms)")
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)


if __name__ == "__main__":
    main()
