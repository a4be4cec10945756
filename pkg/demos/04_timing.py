# coding: utf-8

# # Timing on a mid-sized random graph
#
# Defaults are small enough to finish in a few seconds.  Pass m n edges to
# go bigger, e.g. `python3 demos/04_timing.py 2000 2000 100000`.

import sys

from signed_biclique import generate_random_bigraph
from signed_biclique.bench import run_count

m, n, e = (int(x) for x in sys.argv[1:4]) if len(sys.argv) > 3 else (500, 500, 10_000)
g = generate_random_bigraph(m, n, edges=e, seed=1)
print(g.stats().as_dict() | {"left_degree_histogram": "...", "right_degree_histogram": "..."})

for p, q in [(3, 3), (3, 4), (4, 3)]:
    for algo in ("baseline", "bbwc", "bbvp"):
        r = run_count(g, algo, p, q, memory="none")
        work = r.bicliques_materialized if algo == "baseline" else (r.wedges or r.subsets)
        print(f"p={p} q={q} {algo:8s} count={r.count:<8} work={work:<10} {r.wall_ms:9.1f} ms")
