# coding: utf-8

# # Three counters, one answer
#
# Sweep a batch of small seeded graphs and compare the three counters
# against brute force.  Also prints the work each one did.

import random
import sys
from fractions import Fraction

from signed_biclique import (
    count_balanced_baseline,
    count_balanced_bbvp,
    count_balanced_bbwc,
    count_balanced_bruteforce,
    generate_random_bigraph,
)

n_graphs = int(sys.argv[1]) if len(sys.argv) > 1 else 50

totals = {"baseline": 0, "bbwc": 0, "bbvp": 0}
mismatch = 0
for seed in range(n_graphs):
    rnd = random.Random(seed)
    m, n = rnd.randint(2, 12), rnd.randint(2, 12)
    g = generate_random_bigraph(m, n, density=Fraction(rnd.choice([2, 4, 6, 8]), 10),
                                p_pos=Fraction(rnd.choice([3, 5, 7, 10]), 10), seed=seed)
    for p in (2, 3, 4):
        for q in (2, 3, 4):
            truth = count_balanced_bruteforce(g, p, q)
            b = count_balanced_baseline(g, p, q)
            w = count_balanced_bbwc(g, p, q)
            v = count_balanced_bbvp(g, p, q)
            mismatch += len({truth, b.count, w.count, v.count}) != 1
            totals["baseline"] += b.bicliques_materialized
            totals["bbwc"] += w.wedges
            totals["bbvp"] += v.subsets

print(f"{n_graphs} graphs x 9 (p,q) pairs, mismatches: {mismatch}")

# Work: bicliques built by the baseline, wedges bucketed, subsets tried.

for k, v in totals.items():
    print(f"  {k:8s} {v}")
