import random
from fractions import Fraction
from itertools import product

import pytest

from signed_biclique import (
    Biclique,
    Butterfly,
    MissingEdge,
    SizeGuardExceeded,
    Sign,
    biclique_balanced_pairwise,
    biclique_balanced_rank1,
    build_graph,
    butterfly_balanced,
    count_all_bruteforce,
    count_balanced_bruteforce,
    enumerate_bicliques,
    generate_random_bigraph,
)
from signed_biclique.oracle import (
    count_balanced_butterflies_direct,
    matrix_balanced_pairwise,
    matrix_balanced_rank1,
)

P, N = Sign.POSITIVE, Sign.NEGATIVE


def complete(m, n, negative=()):
    return build_graph([(u, v, N if (u, v) in negative else P) for u in range(m) for v in range(n)])


@pytest.mark.parametrize(
    "signs,expected",
    [((P, P, P, P), True), ((N, P, P, P), False), ((N, N, P, P), True), ((N, N, N, P), False), ((N, N, N, N), True)],
)
def test_butterfly_parity(signs, expected):
    assert butterfly_balanced(Butterfly(0, 1, 0, 1, signs)) is expected


def test_butterfly_from_graph(signed_k44):
    b = Butterfly.from_graph(signed_k44, 0, 1, 2, 3)
    assert b.signs == (P, N, P, P)
    assert not butterfly_balanced(b)
    with pytest.raises(MissingEdge):
        Butterfly.from_graph(build_graph([(0, 0, P), (1, 1, P)]), 0, 1, 0, 1)


def test_all_positive_k33_balanced():
    b = Biclique.from_graph(complete(3, 3), [0, 1, 2], [0, 1, 2])
    assert biclique_balanced_pairwise(b) and biclique_balanced_rank1(b)
    assert sum(1 for _ in b.butterflies()) == 9


def test_k22_one_negative_unbalanced():
    b = Biclique.from_graph(complete(2, 2, {(1, 0)}), [0, 1], [0, 1])
    assert not biclique_balanced_pairwise(b)
    assert not biclique_balanced_rank1(b)


def test_outer_product_k23_balanced():
    rows, cols = (1, -1), (1, 1, -1)
    M = [[r * c for c in cols] for r in rows]
    neg = {(i, j) for i in range(2) for j in range(3) if M[i][j] < 0}
    b = Biclique.from_graph(complete(2, 3, neg), [0, 1], [0, 1, 2])
    assert sum(1 for _ in b.butterflies()) == 3  # C(2,2) * C(3,2)
    assert biclique_balanced_pairwise(b) and biclique_balanced_rank1(b)


def test_biclique_requires_all_edges(example44):
    with pytest.raises(MissingEdge):
        Biclique.from_graph(example44, [1, 2], [2, 3])


def test_balance_oracles_agree_on_random_matrices():
    rnd = random.Random(7)
    seen = {True: 0, False: 0}
    for _ in range(500):
        p, q = rnd.randint(1, 5), rnd.randint(1, 5)
        if rnd.random() < 0.5:
            r = [rnd.choice((1, -1)) for _ in range(p)]
            c = [rnd.choice((1, -1)) for _ in range(q)]
            M = [[a * b for b in c] for a in r]
            if rnd.random() < 0.5:
                i, j = rnd.randrange(p), rnd.randrange(q)
                M[i][j] = -M[i][j]
        else:
            M = [[rnd.choice((1, -1)) for _ in range(q)] for _ in range(p)]
        verdict = matrix_balanced_pairwise(M)
        assert matrix_balanced_rank1(M) == verdict
        seen[verdict] += 1
    assert seen[True] > 50 and seen[False] > 50


def test_rank1_sign_flip_symmetry():
    for bits in product((1, -1), repeat=6):
        M = [list(bits[:3]), list(bits[3:])]
        flipped = [[-x for x in row] for row in M]
        assert matrix_balanced_rank1(M) == matrix_balanced_rank1(flipped)
        assert matrix_balanced_pairwise(M) == matrix_balanced_pairwise(flipped)


def test_bruteforce_k44():
    g = complete(4, 4)
    assert count_all_bruteforce(g, 3, 3) == count_balanced_bruteforce(g, 3, 3) == 16


def test_bruteforce_example44(example44):
    assert count_all_bruteforce(example44, 3, 3) == 0
    assert count_balanced_bruteforce(example44, 3, 3) == 0
    assert list(enumerate_bicliques(example44, 3, 3)) == []
    # (2,2) is not empty, and everything is positive
    assert count_all_bruteforce(example44, 2, 2) == count_balanced_bruteforce(example44, 2, 2) > 0


def test_bruteforce_matches_direct_quadruple_loop():
    for seed in range(5):
        g = generate_random_bigraph(8, 8, density=Fraction(3, 5), p_pos=Fraction(1, 2), seed=seed)
        assert count_balanced_bruteforce(g, 2, 2) == count_balanced_butterflies_direct(g)


def test_bruteforce_signed_k44(signed_k44):
    # every 3x3 minor, checked one at a time with the rank-1 test
    from itertools import combinations

    expected = 0
    for L in combinations(range(4), 3):
        for R in combinations(range(4), 3):
            expected += biclique_balanced_rank1(Biclique.from_graph(signed_k44, L, R))
    assert count_balanced_bruteforce(signed_k44, 3, 3) == expected
    assert count_all_bruteforce(signed_k44, 3, 3) == 16


def test_size_guard():
    g = complete(21, 20)
    with pytest.raises(SizeGuardExceeded):
        count_all_bruteforce(g, 2, 2)
    assert count_all_bruteforce(g, 20, 20, max_cells=None) == 21


def test_balanced_at_most_all_and_flip_invariant(small_corpus):
    for g in small_corpus[:20]:
        for p, q in ((2, 2), (2, 3), (3, 2)):
            bal = count_balanced_bruteforce(g, p, q)
            assert bal <= count_all_bruteforce(g, p, q)
            assert count_balanced_bruteforce(g.flip_signs(), p, q) == bal
            assert count_balanced_bruteforce(g.transpose(), q, p) == bal
