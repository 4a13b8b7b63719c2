"""Command-line front end: ``kkminer {mine,bounds,verify}``.

Exit codes: 0 success, 1 usage, 2 I/O or parse error, 3 verification
failure, 4 success after a combine attempt fell back on the memory budget.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .data import TransactionParseError, load_transactions
from .miner import BOUND_KINDS, COUNTERS, MinerConfig, format_patterns, mine
from .trie import PatternTrie

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_VERIFY, EXIT_FALLBACK = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    parse.__name__ = f"int>={lo}"
    return parse


positive = _int_at_least(1)
nonnegative = _int_at_least(0)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="kkminer", description="Levelwise frequent-pattern mining with candidate bounds.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("mine", help="mine frequent patterns from a transaction file")
    m.add_argument("--input", required=True, help="transaction file, one whitespace-separated line per transaction")
    m.add_argument("--minsup", required=True, type=positive, help="absolute support threshold")
    m.add_argument("--reorder", action=argparse.BooleanOptionalAction, default=True,
                   help="number items by increasing frequency (default: on)")
    m.add_argument("--bound", choices=BOUND_KINDS, default="gkk_star",
                   help="bound used for early stopping and combining")
    m.add_argument("--combine-limit", type=nonnegative, default=None,
                   help="combine all remaining levels once the total bound is at most this")
    m.add_argument("--memory-budget", type=nonnegative, default=None,
                   help="max candidates a combine may materialize before falling back")
    m.add_argument("--strict", action="store_true", help="require support > minsup")
    m.add_argument("--counter", choices=COUNTERS, default="bitmap", help="support counting backend")
    m.add_argument("--stats", default=None, help="write per-level bound statistics as CSV")
    m.add_argument("--output", default=None, help="pattern output file (default: stdout)")
    m.set_defaults(func=cmd_mine)

    b = sub.add_parser("bounds", help="evaluate the bounds for a family of equal-size itemsets")
    b.add_argument("--input", required=True, help="one itemset per line")
    which = b.add_mutually_exclusive_group()
    which.add_argument("--p", type=positive, default=None, help="print the bounds for size k+p only")
    which.add_argument("--all", action="store_true", help="print every nonzero level (default)")
    b.add_argument("--kind", choices=("kk", "kk_star", "both"), default="both")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="check the bounds against brute force")
    v.add_argument("--max-n", type=nonnegative, default=200)
    v.add_argument("--max-k", type=nonnegative, default=5)
    v.add_argument("--max-p", type=nonnegative, default=4)
    v.add_argument("--seed", type=nonnegative, default=0)
    v.add_argument("--families", type=nonnegative, default=1000, help="random families for the sandwich sweep")
    v.add_argument("--instances", type=nonnegative, default=200, help="random instances for the recursion check")
    v.set_defaults(func=cmd_verify)
    return ap


def cmd_mine(args) -> int:
    try:
        cfg = MinerConfig(minsup=args.minsup, reorder=args.reorder, bound_kind=args.bound,
                          combine_limit=args.combine_limit, stats_path=args.stats,
                          strict=args.strict, memory_budget=args.memory_budget,
                          counter=args.counter)
    except ValueError as exc:
        print(f"kkminer: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        db = load_transactions(args.input, reorder=args.reorder)
        result = mine(db, cfg)
        text = format_patterns(result)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except TransactionParseError as exc:
        print(f"kkminer: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"kkminer: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"kkminer: {len(result.patterns)} frequent patterns, {result.passes} passes", file=sys.stderr)
    if result.fell_back:
        print("kkminer: combining exceeded the memory budget; finished level by level", file=sys.stderr)
        return EXIT_FALLBACK
    return EXIT_OK


class _FamilyError(ValueError):
    pass


def _read_family(path: str) -> list[tuple[int, ...]]:
    sets = []
    k = None
    first = 0
    with open(path) as fh:
        for no, line in enumerate(fh, 1):
            toks = line.split()
            if not toks:
                continue
            for tok in toks:
                if not tok.isdigit():
                    raise TransactionParseError(no, tok, path)
            s = tuple(sorted({int(t) for t in toks}))
            if k is None:
                k, first = len(s), no
            elif len(s) != k:
                raise _FamilyError(f"{path}:{no}: itemset of size {len(s)}, "
                                   f"but line {first} has size {k}")
            sets.append(s)
    return sets


def _fmt(levels) -> str:
    return ",".join(map(str, levels)) if levels else "0"


def cmd_bounds(args) -> int:
    try:
        sets = _read_family(args.input)
    except (OSError, TransactionParseError, _FamilyError) as exc:
        print(f"kkminer: {exc}", file=sys.stderr)
        return EXIT_IO
    trie = PatternTrie.from_itemsets(sets)
    k = trie.k
    out = [f"k: {k}", f"size: {len(set(sets))}"]
    if k == 0:
        out.append("empty family: every bound is 0")
        print("\n".join(out))
        return EXIT_OK
    b = trie.bounds()
    show_kk = args.kind in ("kk", "both")
    show_star = args.kind in ("kk_star", "both")
    if args.p is not None:
        if show_kk:
            out.append(f"kk: {b.kk_at(args.p)}")
        if show_star:
            out.append(f"kk_star: {b.kk_star_at(args.p)}")
    else:
        if show_kk:
            out.append(f"kk: {_fmt(b.kk)}")
        if show_star:
            out.append(f"kk_star: {_fmt(b.kk_star)}")
    if show_kk:
        out += [f"mu: {b.mu}", f"kk_total: {b.kk_total}"]
    if show_star:
        out += [f"mu_star: {b.mu_star}", f"kk_star_total: {b.kk_star_total}"]
    out.append(f"obvious: {b.obvious}")
    print("\n".join(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import recursion_sweep, sandwich_sweep, tightness_sweep

    results = [tightness_sweep(args.max_n, args.max_k, args.max_p)]
    if args.max_n > 0:
        results.append(sandwich_sweep(args.families, seed=args.seed, max_p=max(args.max_p, 1)))
        results.append(recursion_sweep(args.instances, seed=args.seed + 1))
    failed = 0
    for res in results:
        print(res)
        for msg in res.failures[:20]:
            print(f"  FAIL {msg}")
        failed += len(res.failures)
    return EXIT_VERIFY if failed else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
