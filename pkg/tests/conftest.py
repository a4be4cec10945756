import random
from fractions import Fraction

import pytest

from signed_biclique import Sign, build_graph, generate_random_bigraph

P, N = Sign.POSITIVE, Sign.NEGATIVE

# 4x4 worked example, all edges positive; u0 sees every V vertex
EXAMPLE_EDGES = [
    (0, 0), (0, 1), (0, 2), (0, 3),
    (1, 0), (1, 1), (1, 2),
    (2, 0), (2, 1), (2, 3),
    (3, 0), (3, 2), (3, 3),
]

# complete 4x4 with four negative edges
SIGNED_K44_NEGATIVE = {(0, 3), (2, 0), (3, 0), (3, 1)}

DENSITIES = (Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5))
P_POS = (Fraction(3, 10), Fraction(1, 2), Fraction(7, 10), Fraction(1))
PQ_GRID = [(p, q) for p in (2, 3, 4) for q in (2, 3, 4)]


def example_graph():
    return build_graph([(u, v, P) for u, v in EXAMPLE_EDGES])


def signed_k44_graph():
    return build_graph([(u, v, N if (u, v) in SIGNED_K44_NEGATIVE else P) for u in range(4) for v in range(4)])


def corpus(count=200):
    """Seeded random graphs with m, n in [2, 12], every density x p_pos pair."""
    out = []
    for seed in range(count):
        rnd = random.Random(10_000 + seed)
        m, n = rnd.randint(2, 12), rnd.randint(2, 12)
        density = DENSITIES[seed % 4]
        p_pos = P_POS[(seed // 4) % 4]
        out.append(generate_random_bigraph(m, n, density=density, p_pos=p_pos, seed=seed))
    return out


@pytest.fixture
def example44():
    return example_graph()


@pytest.fixture
def signed_k44():
    return signed_k44_graph()


@pytest.fixture
def k22():
    return build_graph([(0, 0, P), (0, 1, P), (1, 0, P), (1, 1, P)])


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(40)


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
