"""Vertex-based pruning balanced (p, q)-biclique counting.

Per anchor u, a 2-hop walk tallies how many neighbours every same-side vertex
shares with u.  Only vertices sharing at least q become candidates, and only
(p-1)-subsets of candidates are enumerated.  The common neighbourhood T of a
subset is split by s/d type and each type class contributes C(|class|, q).

Common-neighbour lists are kept as bitmasks over the positions of Gamma(u),
so intersecting two lists is a single ``&`` and |T| is ``int.bit_count``.
"""

from __future__ import annotations

import time
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .counting import BinomialRow, checked_add
from .errors import InvalidParameter
from .graph import (
    AnchorChoice,
    Orientation,
    SignedBipartiteGraph,
    VertexRef,
    oriented_sizes,
    select_anchor_side,
    validate_pq,
)
from .report import NO_DEADLINE, CountReport, Deadline

ANCHOR_ORDERS = ("highest", "lowest")


@dataclass
class AnchorContext:
    anchor: VertexRef
    cnt: dict[int, int]
    candidates: list[int]  # descending priority
    lists: dict[int, list[int]] = field(default_factory=dict)  # w -> sorted Gamma(u) & Gamma(w)
    masks: dict[int, int] = field(default_factory=dict, repr=False)
    diffs: dict[int, int] = field(default_factory=dict, repr=False)
    neighbourhood: tuple[int, ...] = field(default=(), repr=False)

    @property
    def built(self) -> bool:
        return bool(self.lists)


def _slice(at: int, length: int, anchor_order: str) -> tuple[int, int]:
    # lists are in descending priority, so lower-priority vertices follow `at`
    return (at + 1, length) if anchor_order == "highest" else (0, at)


def _anchor_masks(
    o: Orientation, u: int, k_anchor: int, k_other: int, anchor_order: str
) -> tuple[Counter, list[int], dict[int, int], dict[int, int]]:
    cnt: Counter[int] = Counter()
    spans = []
    for v, at in zip(o.adj[u], o.pos[u]):
        ws = o.other_adj[v]
        lo, hi = _slice(at, len(ws), anchor_order)
        spans.append((lo, hi))
        cnt.update(ws[lo:hi])
    cands = [w for w, c in cnt.items() if c >= k_other]
    if len(cands) < k_anchor - 1:
        return cnt, cands, {}, {}
    cands.sort(key=o.rank.__getitem__, reverse=True)

    chosen = set(cands)
    masks = dict.fromkeys(cands, 0)
    diffs = dict.fromkeys(cands, 0)
    for j, (v, s_uv, (lo, hi)) in enumerate(zip(o.adj[u], o.neg[u], spans)):
        bit = 1 << j
        for w, b in zip(o.other_adj[v][lo:hi], o.other_neg[v][lo:hi]):
            if w in chosen:
                masks[w] |= bit
                if b != s_uv:
                    diffs[w] |= bit
    return cnt, cands, masks, diffs


def build_anchor_context(
    g: SignedBipartiteGraph,
    u: VertexRef,
    q: int,
    p: int | None = None,
    *,
    anchor_order: str = "highest",
) -> AnchorContext:
    """Candidate set and common-neighbour lists for anchor ``u``.

    ``q`` is the number of opposite-side vertices a biclique needs and ``p``
    the number on u's side; without ``p`` the |C| >= p - 1 gate is not
    applied and the lists are always built.
    """
    if anchor_order not in ANCHOR_ORDERS:
        raise InvalidParameter(f"anchor_order must be one of {ANCHOR_ORDERS}")
    o = g.orient(u.side)
    k_anchor = 1 if p is None else p
    cnt, cands, masks, diffs = _anchor_masks(o, u.index, k_anchor, q, anchor_order)
    nbhd = o.adj[u.index]
    ctx = AnchorContext(u, dict(cnt), cands, neighbourhood=nbhd)
    if masks:
        ctx.masks, ctx.diffs = masks, diffs
        ctx.lists = {w: sorted(nbhd[j] for j in range(len(nbhd)) if masks[w] >> j & 1) for w in cands}
    return ctx


def type_tally(g: SignedBipartiteGraph, ctx: AnchorContext, subset: Sequence[int]) -> dict[int, int]:
    """``{type code: completions}`` for an ordered subset of candidates.

    Walks T vertex by vertex and compares edge signs directly; the counter
    itself uses a mask partition that must agree with this.
    """
    T = set(ctx.lists[subset[0]])
    for w in subset[1:]:
        T &= set(ctx.lists[w])
    u = ctx.anchor
    other = u.side.other
    x: Counter[int] = Counter()
    for v in T:
        vr = VertexRef(other, v)
        s_uv = g.edge_sign(u, vr)
        code = 0
        for i, w in enumerate(subset):
            if g.edge_sign(vr, VertexRef(u.side, w)) is not s_uv:
                code |= 1 << i
        x[code] += 1
    return dict(x)


def count_balanced_bbvp(
    g: SignedBipartiteGraph,
    p: int,
    q: int,
    *,
    anchor_side: AnchorChoice = "auto",
    anchor_order: str = "highest",
    anchors: Iterable[int] | None = None,
    deadline: Deadline = NO_DEADLINE,
    trace: bool = False,
) -> CountReport:
    """Count balanced (p, q)-bicliques by candidate pruning.

    ``anchor_order="highest"`` keeps candidates of lower priority than the
    anchor (the anchor is the top vertex of its biclique); ``"lowest"`` keeps
    higher-priority candidates instead.  Both count every biclique once.
    """
    validate_pq(p, q)
    if anchor_order not in ANCHOR_ORDERS:
        raise InvalidParameter(f"anchor_order must be one of {ANCHOR_ORDERS}")
    t0 = time.perf_counter()
    side = select_anchor_side(g, anchor_side)
    k_anchor, k_other = oriented_sizes(side, p, q)
    o = g.orient(side)
    levels = k_anchor - 1
    choose_q = BinomialRow(k_other, g.max_degree).table
    rep = CountReport("bbvp", p, q, side, per_anchor={} if trace else None)

    def classes_total(T: int, dsel: tuple[int, ...]) -> int:
        classes = [T]
        for d in dsel:
            classes = [c for cl in classes for c in (cl & ~d, cl & d) if c]
        return sum(choose_q[c.bit_count()] for c in classes)

    anchor_iter = range(o.size) if anchors is None else anchors
    for u in anchor_iter:
        deadline.tick()
        _, cands, masks, diffs = _anchor_masks(o, u, k_anchor, k_other, anchor_order)
        if not masks:
            if trace:
                rep.per_anchor[u] = 0
            continue
        rep.candidate_sets += 1
        M = [masks[w] for w in cands]
        D = [diffs[w] for w in cands]
        k = len(cands)
        found = 0
        subsets = intersections = 0

        def walk(start: int, T: int, depth: int, dsel: tuple[int, ...]) -> None:
            nonlocal found, subsets, intersections
            stop = k - (levels - 1 - depth)
            if depth == levels - 1:
                n = stop - start
                if n <= 0:
                    return
                subsets += n
                if depth == 0:
                    for j in range(start, stop):
                        found += classes_total(M[j], (D[j],))
                    return
                intersections += n
                hits = [j for j in range(start, stop) if (T & M[j]).bit_count() >= k_other]
                for j in hits:
                    found += classes_total(T & M[j], dsel + (D[j],))
                return
            for j in range(start, stop):
                if depth == 0:
                    t = M[j]
                else:
                    t = T & M[j]
                    intersections += 1
                    if t.bit_count() < k_other:
                        continue
                walk(j + 1, t, depth + 1, dsel + (D[j],))

        walk(0, 0, 0, ())
        rep.count = checked_add(rep.count, found)
        rep.subsets += subsets
        rep.intersections += intersections
        if trace:
            rep.per_anchor[u] = subsets

    rep.wall_ms = (time.perf_counter() - t0) * 1000.0
    return rep
