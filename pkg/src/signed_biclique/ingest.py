"""Reading, signing, generating and writing signed bipartite graphs.

Input formats are whitespace-separated edge lists; lines starting with one
of the comment prefixes are skipped and columns after the ones a format needs
are ignored (KONECT files carry weights and timestamps there).

Randomness comes from Philox4x64-10 (the Random123 counter-based generator,
via ``numpy.random.Philox``) keyed by ``seed | (stream << 64)``.  Draw ``i``
is the ``i``-th 64-bit output word ``x_i``; a Bernoulli(p) trial succeeds iff
``x_i < floor(p * 2**64)``.  Draws are consumed in input edge order, so equal
(edges, p, seed) always give equal signs.
"""

from __future__ import annotations

import enum
import io
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TextIO, Union

import numpy as np

from .errors import DuplicateEdge, HeaderMismatch, InfeasibleEdgeCount, InvalidParameter, ParseError
from .graph import Sign, SignedBipartiteGraph

Rational = Union[Fraction, int, float, str]
Source = Union[str, TextIO, Iterable[str]]

DEFAULT_COMMENT_PREFIXES = frozenset("#%")


def _fraction(x: Rational) -> Fraction:
    # str() first so that 0.7 means 7/10, not the nearest double
    return x if isinstance(x, Fraction) else Fraction(str(x))


class Format(enum.Enum):
    SIGNED = "edgelist"
    RATED = "ratings"
    UNSIGNED = "unsigned"
    CANONICAL = "canonical"


@dataclass(frozen=True)
class Native:
    """Signs are read from the third column."""


@dataclass(frozen=True)
class RatingThreshold:
    """Positive iff rating >= pos_min, or rating > pos_min when ``strict``."""

    pos_min: Fraction
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "pos_min", _fraction(self.pos_min))

    def sign(self, rating: Fraction) -> Sign:
        positive = rating > self.pos_min if self.strict else rating >= self.pos_min
        return Sign.POSITIVE if positive else Sign.NEGATIVE


@dataclass(frozen=True)
class BernoulliRandom:
    p_pos: Fraction
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "p_pos", _fraction(self.p_pos))
        _check_probability(self.p_pos)
        _check_seed(self.seed)


# 10-star Jester ratings: strictly greater than 6 is positive
JESTER = RatingThreshold(Fraction(6), strict=True)
# 5-star Epinions ratings: 4 or higher is positive
EPINIONS = RatingThreshold(Fraction(4), strict=False)

SigningRule = Union[Native, RatingThreshold, BernoulliRandom]


@dataclass(frozen=True)
class IngestSpec:
    format: Format
    signing_rule: SigningRule = Native()
    comment_prefixes: frozenset[str] = DEFAULT_COMMENT_PREFIXES

    def __post_init__(self):
        ok = {
            Format.SIGNED: Native,
            Format.CANONICAL: Native,
            Format.RATED: RatingThreshold,
            Format.UNSIGNED: BernoulliRandom,
        }[self.format]
        if not isinstance(self.signing_rule, ok):
            raise InvalidParameter(
                f"{type(self.signing_rule).__name__} cannot be used with {self.format.value} input"
            )


@dataclass
class IdMap:
    """First-seen assignment of dense indices to external vertex ids."""

    left: dict[str, int] = field(default_factory=dict)
    right: dict[str, int] = field(default_factory=dict)

    def lookup(self, u: str, v: str) -> tuple[int, int]:
        return self.left.setdefault(u, len(self.left)), self.right.setdefault(v, len(self.right))

    def write(self, out: TextIO) -> None:
        for tag, table in (("U", self.left), ("V", self.right)):
            for ext, idx in table.items():
                out.write(f"{tag} {idx} {ext}\n")


# -- PRNG ------------------------------------------------------------------

def _check_probability(p: Fraction) -> None:
    if not 0 <= p <= 1:
        raise InvalidParameter(f"probability {p} outside [0, 1]")


def _check_seed(seed: int) -> None:
    if not 0 <= seed < 1 << 64:
        raise InvalidParameter("seed must be an unsigned 64-bit integer")


def philox_words(seed: int, count: int, stream: int = 0) -> np.ndarray:
    """The first ``count`` 64-bit outputs of Philox4x64-10 for (seed, stream)."""
    _check_seed(seed)
    bitgen = np.random.Philox(key=seed | (stream << 64))
    return bitgen.random_raw(count).astype(np.uint64, copy=False)


def bernoulli(seed: int, count: int, p: Rational, stream: int = 0) -> np.ndarray:
    """Boolean array of ``count`` independent Bernoulli(p) trials."""
    p = _fraction(p)
    _check_probability(p)
    threshold = (p.numerator << 64) // p.denominator
    if threshold >= 1 << 64:
        return np.ones(count, dtype=bool)
    return philox_words(seed, count, stream) < np.uint64(threshold)


# -- line-level parsing ----------------------------------------------------

def _lines(source: Source) -> Iterable[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def _records(source: Source, prefixes: Iterable[str], width: int) -> Iterator[tuple[int, list[str]]]:
    prefixes = tuple(prefixes)
    for lineno, line in enumerate(_lines(source), start=1):
        text = line.strip()
        if not text or (prefixes and text.startswith(prefixes)):
            continue
        toks = text.split()
        if len(toks) < width:
            raise ParseError(lineno, f"expected at least {width} columns, got {len(toks)}")
        yield lineno, toks


def _index(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(lineno, f"bad vertex id {tok!r}") from None
    if value < 0:
        raise ParseError(lineno, f"negative vertex id {tok!r}")
    return value


_SIGN_TOKENS = {
    "1": Sign.POSITIVE, "+": Sign.POSITIVE, "+1": Sign.POSITIVE,
    "0": Sign.NEGATIVE, "-": Sign.NEGATIVE, "-1": Sign.NEGATIVE, "−": Sign.NEGATIVE,
}


def _endpoints(toks: list[str], lineno: int, id_map: IdMap | None) -> tuple[int, int]:
    if id_map is not None:
        return id_map.lookup(toks[0], toks[1])
    return _index(toks[0], lineno), _index(toks[1], lineno)


def _build(rows: Iterable[tuple[int, int, int, Sign]], left_count=None, right_count=None) -> SignedBipartiteGraph:
    seen: dict[tuple[int, int], int] = {}
    edges = []
    for lineno, u, v, s in rows:
        if (u, v) in seen:
            raise DuplicateEdge(u, v, line=lineno)
        seen[(u, v)] = lineno
        edges.append((u, v, s))
    return SignedBipartiteGraph(edges, left_count=left_count, right_count=right_count)


def parse_signed(source: Source, spec: IngestSpec | None = None, *, id_map: IdMap | None = None) -> SignedBipartiteGraph:
    """``u v s`` lines with s in {1, 0, +, -, +1, -1}; 0 means negative."""
    spec = spec or IngestSpec(Format.SIGNED)
    if spec.format is not Format.SIGNED:
        raise InvalidParameter("parse_signed needs a signed edge list spec")

    def rows():
        for lineno, toks in _records(source, spec.comment_prefixes, 3):
            u, v = _endpoints(toks, lineno, id_map)
            s = _SIGN_TOKENS.get(toks[2])
            if s is None:
                raise ParseError(lineno, f"bad sign {toks[2]!r}")
            yield lineno, u, v, s

    return _build(rows())


def binarize_ratings(
    source: Source, rule: RatingThreshold | Rational, *, strict: bool = False,
    comment_prefixes: Iterable[str] = DEFAULT_COMMENT_PREFIXES, id_map: IdMap | None = None,
) -> SignedBipartiteGraph:
    """``u v rating`` lines; the rule decides the sign of every rating."""
    if not isinstance(rule, RatingThreshold):
        rule = RatingThreshold(_fraction(rule), strict=strict)

    def rows():
        for lineno, toks in _records(source, comment_prefixes, 3):
            u, v = _endpoints(toks, lineno, id_map)
            try:
                rating = Fraction(toks[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(lineno, f"bad rating {toks[2]!r}") from None
            yield lineno, u, v, rule.sign(rating)

    return _build(rows())


def read_unsigned(
    source: Source, comment_prefixes: Iterable[str] = DEFAULT_COMMENT_PREFIXES, *, id_map: IdMap | None = None
) -> list[tuple[int, int]]:
    """Edge pairs in file order, duplicates rejected."""
    seen: set[tuple[int, int]] = set()
    out = []
    for lineno, toks in _records(source, comment_prefixes, 2):
        e = _endpoints(toks, lineno, id_map)
        if e in seen:
            raise DuplicateEdge(*e, line=lineno)
        seen.add(e)
        out.append(e)
    return out


def assign_random_signs(
    edges: Iterable[tuple[int, int]], p_pos: Rational, seed: int, *, stream: int = 0,
    left_count: int | None = None, right_count: int | None = None,
) -> SignedBipartiteGraph:
    """Each edge independently positive with probability ``p_pos``."""
    edges = list(edges)
    pos = bernoulli(seed, len(edges), p_pos, stream)
    return SignedBipartiteGraph(
        ((u, v, Sign.POSITIVE if b else Sign.NEGATIVE) for (u, v), b in zip(edges, pos.tolist())),
        left_count=left_count,
        right_count=right_count,
    )


def load(source: Source, spec: IngestSpec, *, id_map: IdMap | None = None) -> SignedBipartiteGraph:
    rule = spec.signing_rule
    if spec.format is Format.CANONICAL:
        return read_canonical(source)
    if spec.format is Format.SIGNED:
        return parse_signed(source, spec, id_map=id_map)
    if spec.format is Format.RATED:
        return binarize_ratings(source, rule, comment_prefixes=spec.comment_prefixes, id_map=id_map)
    edges = read_unsigned(source, spec.comment_prefixes, id_map=id_map)
    return assign_random_signs(edges, rule.p_pos, rule.seed)


# -- canonical file --------------------------------------------------------

def write_canonical(g: SignedBipartiteGraph, out: TextIO | None = None) -> str:
    """Header ``m n |E|`` then ``u v s`` lines sorted by (u, v), s in {1, 0}."""
    parts = [f"{g.left_count} {g.right_count} {g.edge_count}\n"]
    parts.extend(f"{u} {v} {1 if s is Sign.POSITIVE else 0}\n" for u, v, s in g.edges())
    text = "".join(parts)
    if out is not None:
        out.write(text)
    return text


def read_canonical(source: Source) -> SignedBipartiteGraph:
    records = _records(source, ("#",), 3)
    try:
        lineno, head = next(records)
    except StopIteration:
        raise ParseError(1, "missing header") from None
    m, n, e = (_index(t, lineno) for t in head[:3])

    def rows():
        for ln, toks in records:
            u, v = _index(toks[0], ln), _index(toks[1], ln)
            if toks[2] not in ("0", "1"):
                raise ParseError(ln, f"bad sign {toks[2]!r}")
            if u >= m or v >= n:
                raise HeaderMismatch(f"line {ln}: edge ({u}, {v}) outside header sizes {m} x {n}")
            yield ln, u, v, Sign.POSITIVE if toks[2] == "1" else Sign.NEGATIVE

    g = _build(rows(), left_count=m, right_count=n)
    if g.edge_count != e:
        raise HeaderMismatch(f"header declares {e} edges, body has {g.edge_count}")
    return g


# -- synthetic graphs ------------------------------------------------------

def generate_random_bigraph(
    m: int,
    n: int,
    *,
    density: Rational | None = None,
    edges: int | None = None,
    p_pos: Rational = Fraction(7, 10),
    seed: int = 0,
) -> SignedBipartiteGraph:
    """Seeded random signed bipartite graph.

    Give exactly one of ``density`` (each of the m*n cells is an edge with that
    probability) or ``edges`` (the cells with the ``edges`` smallest draws).
    Structure uses stream 1, signs stream 2, both keyed by ``seed``.
    """
    if m < 0 or n < 0:
        raise InvalidParameter("side sizes must be non-negative")
    if (density is None) == (edges is None):
        raise InvalidParameter("give exactly one of density or edges")
    cells = m * n
    if edges is not None:
        if edges < 0 or edges > cells:
            raise InfeasibleEdgeCount(f"{edges} edges do not fit in a {m} x {n} bipartite graph")
        words = philox_words(seed, cells, stream=1)
        picked = np.sort(np.argsort(words, kind="stable")[:edges])
    else:
        picked = np.flatnonzero(bernoulli(seed, cells, density, stream=1))
    pairs = [(int(c) // n, int(c) % n) for c in picked] if n else []
    return assign_random_signs(pairs, p_pos, seed, stream=2, left_count=m, right_count=n)
