"""Wedge-centric balanced (p, q)-biclique counting.

For each anchor u on the smaller side, every signed p-wedge
<u, w_1, ..., w_{p-1}, v> with rho(u) > rho(w_1) > ... > rho(w_{p-1}) is
bucketed by its tail and its s/d type.  All wedges of one balanced biclique
share a bucket, and any q centres of one bucket close a balanced biclique, so
each anchor contributes sum C(bucket size, q).
"""

from __future__ import annotations

import time
from collections import Counter
from collections.abc import Iterable, Sequence
from itertools import combinations

from .counting import BinomialRow, binomial, checked_add
from .errors import CrossSideComparison, MissingEdge
from .graph import AnchorChoice, SignedBipartiteGraph, VertexRef, oriented_sizes, select_anchor_side, validate_pq
from .report import NO_DEADLINE, CountReport, Deadline


def wedge_type(g: SignedBipartiteGraph, u: VertexRef, v: VertexRef, tail: Sequence[VertexRef]) -> int:
    """Type code of the signed wedge <u, tail..., v>.

    Bit ``i`` is 0 ("s") when sign(v, tail[i]) equals sign(u, v) and 1 ("d")
    otherwise.
    """
    if v.side is u.side or any(w.side is not u.side for w in tail):
        raise CrossSideComparison("wedge needs u and its tail on one side, v on the other")
    s_uv = g.edge_sign(u, v)
    if s_uv is None:
        raise MissingEdge(f"({u}, {v}) is not an edge")
    code = 0
    for i, w in enumerate(tail):
        s_vw = g.edge_sign(v, w)
        if s_vw is None:
            raise MissingEdge(f"({v}, {w}) is not an edge")
        if s_vw is not s_uv:
            code |= 1 << i
    return code


def type_label(code: int, p: int) -> str:
    """``"ss"``, ``"ds"``, ... with c_1 first."""
    return "".join("d" if code >> i & 1 else "s" for i in range(p - 1))


def count_balanced_bbwc(
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
    tail_len = k_anchor - 1

    # Packing w with its relative sign bit as (w << 1) | (sign(v,w) != sign(u,v))
    # makes the tail tuple itself the (type, tail) bucket key.
    codes = ([], [])
    for ws, bits in zip(o.other_adj, o.other_neg):
        c = tuple((w << 1) | b for w, b in zip(ws, bits))
        codes[0].append(c)
        codes[1].append(tuple(x ^ 1 for x in c))

    choose_q = BinomialRow(k_other, g.max_degree).table
    rep = CountReport("bbwc", p, q, side, per_anchor={} if trace else None)
    buckets: Counter[tuple[int, ...]] = Counter()

    anchor_iter = range(o.size) if anchors is None else anchors
    for u in anchor_iter:
        deadline.tick()
        buckets.clear()
        wedges = 0
        for v, s_uv, at in zip(o.adj[u], o.neg[u], o.pos[u]):
            lower = codes[s_uv][v][at + 1:]
            if len(lower) >= tail_len:
                buckets.update(combinations(lower, tail_len))
                wedges += binomial(len(lower), tail_len)
        if buckets:
            rep.count = checked_add(rep.count, sum(map(choose_q.__getitem__, buckets.values())))
        rep.wedges += wedges
        if trace:
            rep.per_anchor[u] = wedges

    rep.wall_ms = (time.perf_counter() - t0) * 1000.0
    return rep


def bucket_tallies(g: SignedBipartiteGraph, u: VertexRef, p: int) -> dict[tuple[int, tuple[int, ...]], int]:
    """Per-anchor buckets as ``{(type code, tail ids): completions}``.

    Inspection helper; ``p`` here is the anchor-side pattern size.
    """
    o = g.orient(u.side)
    out: Counter[tuple[int, tuple[int, ...]]] = Counter()
    for v, s_uv, at in zip(o.adj[u.index], o.neg[u.index], o.pos[u.index]):
        lower = list(zip(o.other_adj[v], o.other_neg[v]))[at + 1:]
        for tail in combinations(lower, p - 1):
            code = sum(((b ^ s_uv) << i) for i, (_, b) in enumerate(tail))
            out[(code, tuple(w for w, _ in tail))] += 1
    return dict(out)
