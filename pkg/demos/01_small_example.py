# coding: utf-8

# # Counting balanced bicliques on a small graph
#
# A signed bipartite graph has two vertex sides, U and V, and every edge is
# either positive or negative.  A (p, q)-biclique takes p vertices from U and
# q from V with every cross edge present.  It is balanced when each of its
# 4-cycles has an even number of negative edges.
#
# Run with `python3 demos/01_small_example.py`.

from signed_biclique import Sign, build_graph, left, right
from signed_biclique import count_balanced_baseline, count_balanced_bbvp, count_balanced_bbwc
from signed_biclique import build_anchor_context, count_all_bruteforce, count_balanced_bruteforce
from signed_biclique.bbwc import bucket_tallies, type_label

P, N = Sign.POSITIVE, Sign.NEGATIVE

# ## A 4x4 graph with 13 positive edges
#
# u0 sees all of V, the others see three vertices each.

edges = [(0, 0), (0, 1), (0, 2), (0, 3),
         (1, 0), (1, 1), (1, 2),
         (2, 0), (2, 1), (2, 3),
         (3, 0), (3, 2), (3, 3)]
g = build_graph([(u, v, P) for u, v in edges])
print(g.stats().as_dict())

# Priority is degree first, vertex id second.  Neighbour lists come out
# highest priority first.

print([(r.index, g.degree(r)) for r, _ in g.neighbors_desc(left(0))])

# ## No (3,3)-biclique exists at all

for p, q in [(2, 2), (2, 3), (3, 3)]:
    print(p, q, "all:", count_all_bruteforce(g, p, q), "balanced:", count_balanced_bruteforce(g, p, q))

# ## Wedge buckets at anchor u0
#
# The wedge counter groups every path u0 - v - (w1, w2) with
# u0 > w1 > w2 in priority by its tail and sign pattern.  Any q centres of one
# bucket close a balanced biclique; here no bucket reaches q = 3.

rep = count_balanced_bbwc(g, 3, 3, trace=True)
print("wedges at u0:", rep.per_anchor[0], "count:", rep.count)
for (code, tail), hits in sorted(bucket_tallies(g, left(0), 3).items()):
    print("  type", type_label(code, 3), "tail", tail, "centres", hits)

# ## Candidate pruning at anchor u0
#
# The vertex-pruning counter only keeps vertices that share at least q
# neighbours with the anchor, then tries (p-1)-subsets of those.

ctx = build_anchor_context(g, left(0), q=3, p=3)
print("candidates:", ctx.candidates, {w: ctx.cnt[w] for w in ctx.candidates})
print("common lists:", ctx.lists)
rep = count_balanced_bbvp(g, 3, 3, trace=True)
print("subsets at u0:", rep.per_anchor[0], "count:", rep.count)

# ## Adding signs
#
# A complete 4x4 with four negative edges.  Flip any one sign and some
# butterflies become unbalanced.

neg = {(0, 3), (2, 0), (3, 0), (3, 1)}
h = build_graph([(u, v, N if (u, v) in neg else P) for u in range(4) for v in range(4)])
print("sign of (u0, v3):", h.edge_sign(left(0), right(3)).name)
for p, q in [(2, 2), (3, 3)]:
    counts = [f(h, p, q).count for f in (count_balanced_baseline, count_balanced_bbwc, count_balanced_bbvp)]
    print(p, q, counts, "oracle", count_balanced_bruteforce(h, p, q))
