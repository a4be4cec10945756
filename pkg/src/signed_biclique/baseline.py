"""Enumerate-then-filter counter.

Every (p, q)-biclique is listed by a depth-first, priority-ordered extension
of the anchor-side vertex set (BCList style: each frame keeps the common
neighbourhood of the chosen vertices and the lower-priority candidates that
still share at least the required number of neighbours with it).  Each
listed biclique is then materialized and kept only if it is balanced.
"""

from __future__ import annotations

import time
from collections.abc import Iterable
from itertools import combinations

from .counting import checked_add
from .graph import AnchorChoice, Side, SignedBipartiteGraph, oriented_sizes, select_anchor_side, validate_pq
from .oracle import Biclique, biclique_balanced_rank1
from .report import NO_DEADLINE, CountReport, Deadline


def count_balanced_baseline(
    g: SignedBipartiteGraph,
    p: int,
    q: int,
    *,
    anchor_side: AnchorChoice = "auto",
    anchors: Iterable[int] | None = None,
    deadline: Deadline = NO_DEADLINE,
    trace: bool = False,
) -> CountReport:
    validate_pq(p, q)
    t0 = time.perf_counter()
    side = select_anchor_side(g, anchor_side)
    k_anchor, k_other = oriented_sizes(side, p, q)
    o = g.orient(side)
    nbr = [frozenset(a) for a in o.adj]
    order = sorted(range(o.size), key=o.rank.__getitem__, reverse=True)
    place = {x: i for i, x in enumerate(order)}

    rep = CountReport("baseline", p, q, side, per_anchor={} if trace else None)

    def materialize(chosen: list[int], common: frozenset[int]) -> None:
        for R in combinations(sorted(common), k_other):
            if side is Side.LEFT:
                b = Biclique.from_graph(g, chosen, R)
            else:
                b = Biclique.from_graph(g, R, chosen)
            rep.bicliques_materialized += 1
            if biclique_balanced_rank1(b):
                rep.count = checked_add(rep.count, 1)
            else:
                rep.bicliques_rejected += 1

    def extend(chosen: list[int], cands: list[tuple[int, frozenset[int]]]) -> None:
        # cands: (x, common & N(x)) for lower-priority x, each already >= k_other
        for i, (w, common) in enumerate(cands):
            chosen.append(w)
            if len(chosen) == k_anchor:
                materialize(chosen, common)
            else:
                rest = cands[i + 1:]
                rep.intersections += len(rest)
                nxt = [(x, c) for x, _ in rest if len(c := common & nbr[x]) >= k_other]
                if len(chosen) + len(nxt) >= k_anchor:
                    extend(chosen, nxt)
            chosen.pop()

    anchor_iter = range(o.size) if anchors is None else anchors
    for u in anchor_iter:
        deadline.tick()
        before = rep.bicliques_materialized
        root = nbr[u]
        if len(root) >= k_other:
            lower = order[place[u] + 1:]
            if 1 + len(lower) >= k_anchor:
                rep.intersections += len(lower)
                cands = [(x, c) for x in lower if len(c := root & nbr[x]) >= k_other]
                if 1 + len(cands) >= k_anchor:
                    extend([u], cands)
        if trace:
            rep.per_anchor[u] = rep.bicliques_materialized - before

    rep.wall_ms = (time.perf_counter() - t0) * 1000.0
    return rep
