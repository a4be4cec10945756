"""Brute-force ground truth for small graphs.

Nothing here prunes: every p-subset of U is visited and every balanced test is
done from first principles.  Two independent balance checks are provided, one
that inspects all butterflies and one that looks for a per-vertex sign
factorization, so they can be cross-checked against each other.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from .counting import binomial, checked_add
from .errors import MissingEdge, SizeGuardExceeded
from .graph import Side, Sign, SignedBipartiteGraph, validate_pq

DEFAULT_MAX_CELLS = 400

SignMatrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class Butterfly:
    u_i: int
    u_j: int
    v_i: int
    v_j: int
    signs: tuple[Sign, Sign, Sign, Sign]  # (u_i,v_i), (u_i,v_j), (u_j,v_i), (u_j,v_j)

    @classmethod
    def from_graph(cls, g: SignedBipartiteGraph, u_i: int, u_j: int, v_i: int, v_j: int) -> "Butterfly":
        signs = []
        for u, v in ((u_i, v_i), (u_i, v_j), (u_j, v_i), (u_j, v_j)):
            bit = g.sign_bit(u, v)
            if bit is None:
                raise MissingEdge(f"({u}, {v}) is not an edge")
            signs.append(Sign.from_bit(bit))
        return cls(u_i, u_j, v_i, v_j, tuple(signs))

    @property
    def negative_edges(self) -> int:
        return sum(s is Sign.NEGATIVE for s in self.signs)


@dataclass(frozen=True)
class Biclique:
    left: tuple[int, ...]
    right: tuple[int, ...]
    signs: tuple[tuple[Sign, ...], ...]  # signs[i][j] is the sign of (left[i], right[j])

    @classmethod
    def from_graph(cls, g: SignedBipartiteGraph, left: Sequence[int], right: Sequence[int]) -> "Biclique":
        L = tuple(sorted(left))
        R = tuple(sorted(right))
        rows = []
        for u in L:
            row = []
            for v in R:
                bit = g.sign_bit(u, v)
                if bit is None:
                    raise MissingEdge(f"({u}, {v}) is not an edge, so {L} x {R} is not a biclique")
                row.append(Sign.from_bit(bit))
            rows.append(tuple(row))
        return cls(L, R, tuple(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.left), len(self.right)

    def butterflies(self) -> Iterator[Butterfly]:
        S = self.signs
        for i, j in combinations(range(len(self.left)), 2):
            for a, b in combinations(range(len(self.right)), 2):
                yield Butterfly(
                    self.left[i], self.left[j], self.right[a], self.right[b],
                    (S[i][a], S[i][b], S[j][a], S[j][b]),
                )


def butterfly_balanced(b: Butterfly) -> bool:
    return b.negative_edges % 2 == 0


def _as_pm(matrix: SignMatrix) -> list[list[int]]:
    return [[int(Sign.coerce(s)) for s in row] for row in matrix]


def matrix_balanced_pairwise(matrix: SignMatrix) -> bool:
    """No 2x2 minor has an odd number of negative entries."""
    M = _as_pm(matrix)
    p = len(M)
    q = len(M[0]) if p else 0
    for i, j in combinations(range(p), 2):
        for a, b in combinations(range(q), 2):
            if M[i][a] * M[i][b] * M[j][a] * M[j][b] < 0:
                return False
    return True


def matrix_balanced_rank1(matrix: SignMatrix) -> bool:
    """True iff ``matrix[i][j] == row[i] * col[j]`` for some +-1 vectors.

    The first row fixes the column signs (taking row[0] = +1), the first
    column then fixes every row sign; one pass verifies the rest.
    """
    M = _as_pm(matrix)
    if not M or not M[0]:
        return True
    col = M[0]
    for r in M:
        row_sign = r[0] * col[0]
        for a, c in zip(r, col):
            if a != row_sign * c:
                return False
    return True


def biclique_balanced_pairwise(b: Biclique) -> bool:
    return all(butterfly_balanced(bf) for bf in b.butterflies())


def biclique_balanced_rank1(b: Biclique) -> bool:
    return matrix_balanced_rank1(b.signs)


def _guard(g: SignedBipartiteGraph, p: int, q: int, max_cells: int | None) -> None:
    validate_pq(p, q)
    if max_cells is not None and g.left_count * g.right_count > max_cells:
        raise SizeGuardExceeded(
            f"oracle refuses m*n = {g.left_count * g.right_count} > {max_cells}; pass max_cells=None to override"
        )


def _common_neighbourhoods(g: SignedBipartiteGraph, p: int) -> Iterator[tuple[tuple[int, ...], list[int]]]:
    nbrs = [set(a) for a in g.orient(Side.LEFT).adj]
    for L in combinations(range(g.left_count), p):
        common = set.intersection(*(nbrs[u] for u in L))
        yield L, sorted(common)


def enumerate_bicliques(
    g: SignedBipartiteGraph, p: int, q: int, max_cells: int | None = DEFAULT_MAX_CELLS
) -> Iterator[Biclique]:
    """Every (p, q)-biclique with p vertices in U, in lexicographic order."""
    _guard(g, p, q, max_cells)
    for L, common in _common_neighbourhoods(g, p):
        for R in combinations(common, q):
            yield Biclique.from_graph(g, L, R)


def count_all_bruteforce(
    g: SignedBipartiteGraph, p: int, q: int, max_cells: int | None = DEFAULT_MAX_CELLS
) -> int:
    _guard(g, p, q, max_cells)
    total = 0
    for _, common in _common_neighbourhoods(g, p):
        total = checked_add(total, binomial(len(common), q))
    return total


def count_balanced_bruteforce(
    g: SignedBipartiteGraph, p: int, q: int, max_cells: int | None = DEFAULT_MAX_CELLS
) -> int:
    total = 0
    for b in enumerate_bicliques(g, p, q, max_cells):
        if biclique_balanced_pairwise(b):
            total = checked_add(total, 1)
    return total


def count_balanced_butterflies_direct(g: SignedBipartiteGraph) -> int:
    """Balanced (2,2)-bicliques by a plain quadruple loop over vertex ids."""
    m, n = g.left_count, g.right_count
    total = 0
    for u1 in range(m):
        for u2 in range(u1 + 1, m):
            for v1 in range(n):
                for v2 in range(v1 + 1, n):
                    bits = [g.sign_bit(u1, v1), g.sign_bit(u1, v2), g.sign_bit(u2, v1), g.sign_bit(u2, v2)]
                    if None in bits:
                        continue
                    if sum(bits) % 2 == 0:
                        total += 1
    return total

