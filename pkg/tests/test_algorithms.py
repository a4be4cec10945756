"""Exactness, golden fixtures and structural properties of the three counters."""

import random
from collections import defaultdict
from itertools import combinations

import pytest

from signed_biclique import (
    Biclique,
    InvalidParameter,
    Side,
    Sign,
    TimeLimitExceeded,
    biclique_balanced_pairwise,
    build_anchor_context,
    build_graph,
    count_all_bruteforce,
    count_balanced_baseline,
    count_balanced_bbvp,
    count_balanced_bbwc,
    count_balanced_bruteforce,
    left,
    right,
    type_label,
    type_tally,
    wedge_type,
)
from signed_biclique.bbwc import bucket_tallies
from signed_biclique.report import Deadline

P, N = Sign.POSITIVE, Sign.NEGATIVE
COUNTERS = {
    "baseline": count_balanced_baseline,
    "bbwc": count_balanced_bbwc,
    "bbvp": count_balanced_bbvp,
}


def complete(m, n, negative=()):
    return build_graph([(u, v, N if (u, v) in negative else P) for u in range(m) for v in range(n)])


# -- goldens ------------------------------------------------------------------

@pytest.mark.parametrize("name", COUNTERS)
def test_example44_count_zero(example44, name):
    assert COUNTERS[name](example44, 3, 3).count == 0


def test_example44_work_counters(example44):
    w = count_balanced_bbwc(example44, 3, 3, trace=True)
    assert w.anchor_side is Side.LEFT
    assert w.per_anchor[0] == 6
    v = count_balanced_bbvp(example44, 3, 3, trace=True)
    assert v.per_anchor[0] == 3
    b = count_balanced_baseline(example44, 3, 3)
    assert b.bicliques_materialized == 0


def test_example44_candidate_context(example44):
    ctx = build_anchor_context(example44, left(0), q=3, p=3)
    assert sorted(ctx.candidates) == [1, 2, 3]
    assert all(ctx.cnt[w] == 3 for w in (1, 2, 3))
    # the three 2-subsets all have |T| = 2
    for a, b in combinations(ctx.candidates, 2):
        assert len(set(ctx.lists[a]) & set(ctx.lists[b])) == 2


def test_context_isolated_anchor():
    g = build_graph([(1, 0, P), (1, 1, P)], left_count=3)
    ctx = build_anchor_context(g, left(0), q=2, p=2)
    assert ctx.candidates == [] and not ctx.built


def test_context_gate_stops_before_lists():
    # u0 shares only one neighbour with anyone, so nobody reaches q=2
    g = build_graph([(0, 0, P), (0, 1, P), (0, 2, P), (1, 0, P), (2, 1, P), (3, 2, P)])
    ctx = build_anchor_context(g, left(0), q=2, p=2)
    assert ctx.candidates == [] and not ctx.built
    assert max(ctx.cnt.values()) == 1
    with pytest.raises(InvalidParameter):
        build_anchor_context(g, left(0), q=2, anchor_order="sideways")


@pytest.mark.parametrize("name", COUNTERS)
def test_k44_all_positive(name):
    rep = COUNTERS[name](complete(4, 4), 3, 3)
    assert rep.count == 16
    if name == "baseline":
        assert rep.bicliques_rejected == 0 and rep.bicliques_materialized == 16


def test_k33_bbwc_single_bucket():
    assert count_balanced_bbwc(complete(3, 3), 3, 3).count == 1


@pytest.mark.parametrize("name", COUNTERS)
def test_signed_k44_against_oracle(signed_k44, name):
    for p, q in ((2, 2), (2, 3), (3, 3), (3, 4), (4, 4)):
        assert COUNTERS[name](signed_k44, p, q).count == count_balanced_bruteforce(signed_k44, p, q)


@pytest.mark.parametrize("name", COUNTERS)
def test_degenerate_sizes_rejected(example44, name):
    with pytest.raises(InvalidParameter):
        COUNTERS[name](example44, 1, 3)


# -- wedge types --------------------------------------------------------------

def test_wedge_types_per_bit():
    g = build_graph([(0, 0, P), (1, 0, P), (2, 0, P), (3, 0, N)])
    v = right(0)
    assert wedge_type(g, left(0), v, [left(1), left(2)]) == 0
    code = wedge_type(g, left(0), v, [left(3), left(2)])
    assert type_label(code, 3) == "ds" and code == 1
    f = g.flip_signs()
    for tail in ([left(1), left(2)], [left(3), left(2)], [left(3), left(1)]):
        assert wedge_type(f, left(0), v, tail) == wedge_type(g, left(0), v, tail)


def test_bucket_conservation(small_corpus):
    for g in small_corpus:
        for p in (2, 3, 4):
            rep = count_balanced_bbwc(g, p, 2, anchor_side="left", trace=True)
            for u in range(g.left_count):
                assert sum(bucket_tallies(g, left(u), p).values()) == rep.per_anchor[u]


def _buckets_with_centres(g, u, p):
    out = defaultdict(list)
    for vr, _ in g.neighbors_desc(left(u)):
        lower = [w for w, _ in g.neighbors_desc(vr) if g.priority_gt(left(u), w)]
        for tail in combinations(lower, p - 1):
            out[(wedge_type(g, left(u), vr, tail), tuple(w.index for w in tail))].append(vr.index)
    return out


def test_same_bucket_centres_close_balanced_bicliques(small_corpus):
    rnd = random.Random(3)
    checked = 0
    for g in small_corpus:
        for p, q in ((2, 2), (3, 2), (3, 3), (4, 2)):
            for u in range(g.left_count):
                for (_, tail), centres in _buckets_with_centres(g, u, p).items():
                    subsets = list(combinations(centres, q))
                    for R in rnd.sample(subsets, min(3, len(subsets))):
                        b = Biclique.from_graph(g, (u,) + tail, R)
                        assert biclique_balanced_pairwise(b)
                        checked += 1
    assert checked > 100


def test_balanced_biclique_wedges_share_one_type(small_corpus):
    from signed_biclique import enumerate_bicliques

    for g in small_corpus[:15]:
        for p, q in ((3, 2), (3, 3)):
            for b in enumerate_bicliques(g, p, q):
                if not biclique_balanced_pairwise(b):
                    continue
                us = sorted((left(x) for x in b.left), key=g.priority_rank, reverse=True)
                kinds = {wedge_type(g, us[0], right(v), us[1:]) for v in b.right}
                assert len(kinds) == 1


# -- BBVP internals -----------------------------------------------------------

def test_type_tally_matches_mask_partition(small_corpus):
    for g in small_corpus:
        for p, q in ((2, 2), (3, 2), (3, 3), (4, 2)):
            for u in range(g.left_count):
                ctx = build_anchor_context(g, left(u), q=q, p=p)
                if not ctx.built:
                    continue
                for A in combinations(ctx.candidates, p - 1):
                    tally = type_tally(g, ctx, A)
                    # the same classes from the masks
                    T = ctx.masks[A[0]]
                    for w in A[1:]:
                        T &= ctx.masks[w]
                    classes = defaultdict(int)
                    for j in range(T.bit_length()):
                        if T >> j & 1:
                            code = sum((ctx.diffs[w] >> j & 1) << i for i, w in enumerate(A))
                            classes[code] += 1
                    assert dict(classes) == tally


def test_pruning_never_drops_a_biclique(small_corpus):
    # every anchor-side set of a (p,q)-biclique appears as anchor + candidate subset
    for g in small_corpus[:20]:
        for p, q in ((2, 2), (3, 2), (3, 3)):
            for L, common in _all_left_sets(g, p, q):
                us = sorted(L, key=lambda x: g.priority_rank(left(x)), reverse=True)
                ctx = build_anchor_context(g, left(us[0]), q=q, p=p)
                assert set(us[1:]) <= set(ctx.candidates)
                T = set(ctx.lists[us[1]])
                for w in us[2:]:
                    T &= set(ctx.lists[w])
                assert T == set(common)


def _all_left_sets(g, p, q):
    nbrs = [set(r.index for r, _ in g.neighbors_desc(left(u))) for u in range(g.left_count)]
    for L in combinations(range(g.left_count), p):
        common = set.intersection(*(nbrs[u] for u in L))
        if len(common) >= q:
            yield L, common


# -- anchors, orders and limits ----------------------------------------------

@pytest.mark.parametrize("name", COUNTERS)
def test_anchor_side_never_changes_the_count(small_corpus, name):
    for g in small_corpus[:25]:
        for p, q in ((2, 3), (3, 2), (3, 3)):
            a = COUNTERS[name](g, p, q, anchor_side="left").count
            b = COUNTERS[name](g, p, q, anchor_side="right").count
            assert a == b


def test_bbvp_orders_agree(small_corpus):
    for g in small_corpus:
        for p, q in ((2, 2), (3, 3), (4, 2)):
            hi = count_balanced_bbvp(g, p, q, anchor_order="highest").count
            lo = count_balanced_bbvp(g, p, q, anchor_order="lowest").count
            assert hi == lo


def test_baseline_materializes_every_biclique(small_corpus):
    for g in small_corpus:
        for p, q in ((2, 2), (3, 2), (2, 4)):
            rep = count_balanced_baseline(g, p, q)
            assert rep.bicliques_materialized == count_all_bruteforce(g, p, q)
            assert rep.bicliques_materialized - rep.bicliques_rejected == rep.count


@pytest.mark.parametrize("name", COUNTERS)
def test_anchor_subsets_add_up(small_corpus, name):
    g = small_corpus[7]
    whole = COUNTERS[name](g, 2, 2, anchor_side="left").count
    parts = sum(COUNTERS[name](g, 2, 2, anchor_side="left", anchors=range(i, g.left_count, 3)).count
                for i in range(3))
    assert parts == whole


@pytest.mark.parametrize("name", COUNTERS)
def test_expired_deadline_raises(name):
    g = complete(6, 6)
    with pytest.raises(TimeLimitExceeded):
        COUNTERS[name](g, 2, 2, deadline=Deadline(0.0, check_every=1))
