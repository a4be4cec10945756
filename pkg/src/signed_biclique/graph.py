"""Immutable signed bipartite graph with the degree-then-id vertex priority.

Vertices are dense 0-based indices per side.  Every adjacency list is stored
sorted by *descending* priority of the neighbour, so "all neighbours of lower
priority than x" is always a contiguous suffix of a list.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import ConflictingSign, CrossSideComparison, DuplicateEdge, InvalidParameter


class Side(enum.Enum):
    LEFT = "U"
    RIGHT = "V"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

    @property
    def slot(self) -> int:
        return 0 if self is Side.LEFT else 1


class Sign(enum.IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    @property
    def bit(self) -> int:
        """1 for a negative edge, 0 for a positive one."""
        return 1 if self is Sign.NEGATIVE else 0

    @classmethod
    def from_bit(cls, bit: int) -> "Sign":
        return cls.NEGATIVE if bit else cls.POSITIVE

    @classmethod
    def coerce(cls, value: "SignLike") -> "Sign":
        if isinstance(value, Sign):
            return value
        if isinstance(value, str):
            token = value.strip()
            if token in ("+", "+1", "1"):
                return cls.POSITIVE
            if token in ("-", "-1", "−"):
                return cls.NEGATIVE
        elif isinstance(value, int) and not isinstance(value, bool) and value in (1, -1):
            return cls(value)
        raise InvalidParameter(f"not a sign: {value!r}")

    def flipped(self) -> "Sign":
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE

    def __str__(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"


SignLike = Union[Sign, int, str]


@dataclass(frozen=True, order=True)
class VertexRef:
    side: Side
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise InvalidParameter(f"negative vertex index {self.index}")

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"


def left(index: int) -> VertexRef:
    return VertexRef(Side.LEFT, index)


def right(index: int) -> VertexRef:
    return VertexRef(Side.RIGHT, index)


@dataclass(frozen=True)
class GraphStats:
    left_count: int
    right_count: int
    edge_count: int
    max_degree: int
    left_degree_histogram: dict[int, int]
    right_degree_histogram: dict[int, int]

    def as_dict(self) -> dict:
        return {
            "left_count": self.left_count,
            "right_count": self.right_count,
            "edge_count": self.edge_count,
            "max_degree": self.max_degree,
            "left_degree_histogram": dict(sorted(self.left_degree_histogram.items())),
            "right_degree_histogram": dict(sorted(self.right_degree_histogram.items())),
        }


class Orientation(NamedTuple):
    """Flat per-side arrays seen from one anchor side.

    ``adj[x]`` lists the opposite-side neighbours of anchor-side vertex ``x``
    (descending priority), ``neg[x]`` the aligned negative-edge bits and
    ``pos[x][j]`` the index of ``x`` inside ``other_adj[adj[x][j]]``.
    """

    side: Side
    size: int
    rank: list[int]
    adj: list[tuple[int, ...]]
    neg: list[tuple[int, ...]]
    pos: list[tuple[int, ...]]
    other_adj: list[tuple[int, ...]]
    other_neg: list[tuple[int, ...]]


def _priority_ranks(degrees: list[int]) -> list[int]:
    # counting sort by degree; ascending ids inside a bucket break ties
    if not degrees:
        return []
    buckets: list[list[int]] = [[] for _ in range(max(degrees) + 1)]
    for vid, d in enumerate(degrees):
        buckets[d].append(vid)
    rank = [0] * len(degrees)
    r = 0
    for bucket in buckets:
        for vid in bucket:
            rank[vid] = r
            r += 1
    return rank


class SignedBipartiteGraph:
    """Simple bipartite graph G = (U, V, E) with a sign on every edge.

    Build it from ``(u, v, sign)`` triples; ``u`` indexes the left side U and
    ``v`` the right side V.  Side sizes default to one past the largest index
    seen and can be enlarged to keep isolated trailing vertices.
    """

    def __init__(
        self,
        edges: Iterable[tuple[int, int, SignLike]] = (),
        left_count: int | None = None,
        right_count: int | None = None,
    ):
        signs: dict[tuple[int, int], int] = {}
        max_u = max_v = -1
        for u, v, s in edges:
            u, v = int(u), int(v)
            if u < 0 or v < 0:
                raise InvalidParameter(f"negative vertex index in edge ({u}, {v})")
            bit = Sign.coerce(s).bit
            if (u, v) in signs:
                if signs[(u, v)] != bit:
                    raise ConflictingSign(u, v)
                raise DuplicateEdge(u, v)
            signs[(u, v)] = bit
            max_u = max(max_u, u)
            max_v = max(max_v, v)

        m = max_u + 1 if left_count is None else left_count
        n = max_v + 1 if right_count is None else right_count
        if m <= max_u or n <= max_v:
            raise InvalidParameter(
                f"explicit side sizes ({m}, {n}) too small for indices up to ({max_u}, {max_v})"
            )

        self._sizes = (m, n)
        self._signs = signs

        raw: tuple[list[list[tuple[int, int]]], list[list[tuple[int, int]]]] = (
            [[] for _ in range(m)],
            [[] for _ in range(n)],
        )
        for (u, v), bit in signs.items():
            raw[0][u].append((v, bit))
            raw[1][v].append((u, bit))

        self._deg = ([len(a) for a in raw[0]], [len(a) for a in raw[1]])
        self._rank = (_priority_ranks(self._deg[0]), _priority_ranks(self._deg[1]))

        # appending while walking each side in descending priority leaves
        # every opposite-side list sorted by descending priority
        adj: tuple[list[list[int]], list[list[int]]] = ([[] for _ in range(m)], [[] for _ in range(n)])
        neg: tuple[list[list[int]], list[list[int]]] = ([[] for _ in range(m)], [[] for _ in range(n)])
        for s in (0, 1):
            order = sorted(range(self._sizes[s]), key=self._rank[s].__getitem__, reverse=True)
            for x in order:
                for y, bit in raw[s][x]:
                    adj[1 - s][y].append(x)
                    neg[1 - s][y].append(bit)

        self._adj = tuple([tuple(a) for a in side] for side in adj)
        self._neg = tuple([tuple(a) for a in side] for side in neg)

        where_r = [{u: i for i, u in enumerate(lst)} for lst in self._adj[1]]
        pos_left = [tuple(where_r[v][u] for v in self._adj[0][u]) for u in range(m)]
        where_l = [{v: j for j, v in enumerate(lst)} for lst in self._adj[0]]
        pos_right = [tuple(where_l[u][v] for u in self._adj[1][v]) for v in range(n)]
        self._pos = (pos_left, pos_right)
        self._max_degree = max(self._deg[0] + self._deg[1], default=0)

    # -- basic sizes -----------------------------------------------------

    @property
    def left_count(self) -> int:
        return self._sizes[0]

    @property
    def right_count(self) -> int:
        return self._sizes[1]

    @property
    def edge_count(self) -> int:
        return len(self._signs)

    @property
    def max_degree(self) -> int:
        return self._max_degree

    def size(self, side: Side) -> int:
        return self._sizes[side.slot]

    def _check(self, ref: VertexRef) -> int:
        if ref.index >= self._sizes[ref.side.slot]:
            raise InvalidParameter(f"vertex {ref} out of range")
        return ref.side.slot

    # -- per-vertex queries ----------------------------------------------

    def degree(self, ref: VertexRef) -> int:
        return self._deg[self._check(ref)][ref.index]

    def degrees(self, side: Side) -> list[int]:
        return list(self._deg[side.slot])

    def priority_rank(self, ref: VertexRef) -> int:
        """Position of ``ref`` in the ascending priority order of its side."""
        return self._rank[self._check(ref)][ref.index]

    def priority_gt(self, a: VertexRef, b: VertexRef) -> bool:
        """True iff ``a`` outranks ``b``: higher degree, then higher id."""
        if a.side is not b.side:
            raise CrossSideComparison(f"cannot compare {a} with {b}")
        s = self._check(a)
        self._check(b)
        return self._rank[s][a.index] > self._rank[s][b.index]

    def neighbors_desc(self, ref: VertexRef) -> list[tuple[VertexRef, Sign]]:
        s = self._check(ref)
        other = ref.side.other
        return [
            (VertexRef(other, y), Sign.from_bit(bit))
            for y, bit in zip(self._adj[s][ref.index], self._neg[s][ref.index])
        ]

    def neighbor_indices(self, ref: VertexRef) -> tuple[int, ...]:
        return self._adj[self._check(ref)][ref.index]

    def edge_sign(self, a: VertexRef, b: VertexRef) -> Sign | None:
        """Sign of the edge between ``a`` and ``b`` (either order), or None."""
        if a.side is b.side:
            return None
        u, v = (a, b) if a.side is Side.LEFT else (b, a)
        bit = self._signs.get((u.index, v.index))
        return None if bit is None else Sign.from_bit(bit)

    def sign_bit(self, u: int, v: int) -> int | None:
        """Negative bit of left ``u`` -- right ``v``, None for a non-edge."""
        return self._signs.get((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._signs

    # -- whole-graph views -------------------------------------------------

    def edges(self) -> list[tuple[int, int, Sign]]:
        """All edges as ``(u, v, sign)`` sorted by ``(u, v)``."""
        return [(u, v, Sign.from_bit(b)) for (u, v), b in sorted(self._signs.items())]

    def signed_edge_map(self) -> dict[tuple[int, int], Sign]:
        return {e: Sign.from_bit(b) for e, b in self._signs.items()}

    def stats(self) -> GraphStats:
        def hist(degs: list[int]) -> dict[int, int]:
            h: dict[int, int] = {}
            for d in degs:
                h[d] = h.get(d, 0) + 1
            return h

        return GraphStats(
            self.left_count,
            self.right_count,
            self.edge_count,
            self.max_degree,
            hist(self._deg[0]),
            hist(self._deg[1]),
        )

    def orient(self, side: Side) -> Orientation:
        s = side.slot
        return Orientation(
            side=side,
            size=self._sizes[s],
            rank=self._rank[s],
            adj=self._adj[s],
            neg=self._neg[s],
            pos=self._pos[s],
            other_adj=self._adj[1 - s],
            other_neg=self._neg[1 - s],
        )

    def transpose(self) -> "SignedBipartiteGraph":
        """Swap the roles of U and V."""
        return SignedBipartiteGraph(
            ((v, u, Sign.from_bit(b)) for (u, v), b in self._signs.items()),
            left_count=self.right_count,
            right_count=self.left_count,
        )

    def flip_signs(self) -> "SignedBipartiteGraph":
        return SignedBipartiteGraph(
            ((u, v, Sign.from_bit(1 - b)) for (u, v), b in self._signs.items()),
            left_count=self.left_count,
            right_count=self.right_count,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedBipartiteGraph):
            return NotImplemented
        return self._sizes == other._sizes and self._signs == other._signs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"SignedBipartiteGraph(m={self.left_count}, n={self.right_count}, "
            f"edges={self.edge_count}, max_degree={self.max_degree})"
        )


def build_graph(
    edges: Iterable[tuple[int, int, SignLike]],
    left_count: int | None = None,
    right_count: int | None = None,
) -> SignedBipartiteGraph:
    return SignedBipartiteGraph(edges, left_count=left_count, right_count=right_count)


AnchorChoice = Union[str, Side]


def select_anchor_side(g: SignedBipartiteGraph, anchor_side: AnchorChoice = "auto") -> Side:
    """Smaller partition for ``"auto"`` (U on ties), else the requested side."""
    if isinstance(anchor_side, Side):
        return anchor_side
    if anchor_side == "auto":
        return Side.LEFT if g.left_count <= g.right_count else Side.RIGHT
    if anchor_side in ("left", "U", "u"):
        return Side.LEFT
    if anchor_side in ("right", "V", "v"):
        return Side.RIGHT
    raise InvalidParameter(f"unknown anchor side {anchor_side!r}")


def oriented_sizes(side: Side, p: int, q: int) -> tuple[int, int]:
    """(anchor-side size, opposite-side size) for a (p, q) pattern.

    ``p`` always counts U vertices and ``q`` V vertices; anchoring on V swaps
    the roles.
    """
    return (p, q) if side is Side.LEFT else (q, p)


def validate_pq(p: int, q: int) -> None:
    # p = 1 or q = 1 degenerates to star patterns
    if p < 2 or q < 2:
        raise InvalidParameter(f"need p >= 2 and q >= 2 (got p={p}, q={q}); p = 1 or q = 1 only gives stars")
