"""Kruskal-Katona style candidate bounds for levelwise frequent-pattern mining."""

from .combinatorics import CanonicalRep, binomial, canonical_rep, kk_bound, kk_levels, kk_total, mu
from .data import TransactionDB, TransactionParseError, assign_ids, from_raw, load_transactions
from .generalized import (LevelFamilies, g_mu, g_mu_star, gen_candidates, gkk_bound, gkk_star,
                          gkk_star_total, gkk_total, validate)
from .miner import BoundReport, MinerConfig, MiningResult, mine, write_patterns, write_stats
from .trie import (PatternTrie, generate_candidates, kk_star, kk_star_total, mu_star,
                   obvious_bound, project)

__version__ = "0.1.0"
