"""Result record shared by every counter."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .errors import TimeLimitExceeded
from .graph import Side

CSV_COLUMNS = (
    "dataset",
    "algo",
    "p",
    "q",
    "count",
    "wedges",
    "subsets",
    "intersections",
    "bicliques_materialized",
    "wall_ms",
    "peak_mem_bytes",
    "status",
)


@dataclass
class CountReport:
    algorithm: str
    p: int
    q: int
    anchor_side: Side | None
    count: int = 0
    wedges: int = 0
    subsets: int = 0
    intersections: int = 0
    candidate_sets: int = 0
    bicliques_materialized: int = 0
    bicliques_rejected: int = 0
    wall_ms: float = 0.0
    peak_mem_bytes: int | None = None
    mem_method: str | None = None
    per_anchor: dict[int, int] | None = field(default=None, repr=False)

    def merge(self, other: "CountReport") -> "CountReport":
        """Exact sum of two partial reports over disjoint anchor sets."""
        from .counting import checked_add

        per_anchor = None
        if self.per_anchor is not None or other.per_anchor is not None:
            per_anchor = {**(self.per_anchor or {}), **(other.per_anchor or {})}
        return CountReport(
            algorithm=self.algorithm,
            p=self.p,
            q=self.q,
            anchor_side=self.anchor_side,
            count=checked_add(self.count, other.count),
            wedges=self.wedges + other.wedges,
            subsets=self.subsets + other.subsets,
            intersections=self.intersections + other.intersections,
            candidate_sets=self.candidate_sets + other.candidate_sets,
            bicliques_materialized=self.bicliques_materialized + other.bicliques_materialized,
            bicliques_rejected=self.bicliques_rejected + other.bicliques_rejected,
            wall_ms=max(self.wall_ms, other.wall_ms),
            per_anchor=per_anchor,
        )

    def as_dict(self) -> dict:
        d = asdict(self)
        d["anchor_side"] = self.anchor_side.name.lower() if self.anchor_side else None
        d.pop("per_anchor")
        return d


class Deadline:
    """Cooperative time limit polled from inside anchor loops."""

    def __init__(self, seconds: float | None, check_every: int = 64):
        self.limit = seconds
        self.check_every = max(1, check_every)
        self._end = None if seconds is None else time.perf_counter() + seconds
        self._ticks = 0

    def tick(self) -> None:
        if self._end is None:
            return
        self._ticks += 1
        if self._ticks % self.check_every == 0 and time.perf_counter() > self._end:
            raise TimeLimitExceeded(f"time limit of {self.limit}s exceeded")

    def check(self) -> None:
        if self._end is not None and time.perf_counter() > self._end:
            raise TimeLimitExceeded(f"time limit of {self.limit}s exceeded")


NO_DEADLINE = Deadline(None)
