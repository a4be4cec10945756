"""Running counters by name, with timing, memory and time limits."""

from __future__ import annotations

import csv
import json
import sys
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TextIO

from .baseline import count_balanced_baseline
from .bbvp import count_balanced_bbvp
from .bbwc import count_balanced_bbwc
from .errors import InvalidParameter, TimeLimitExceeded
from .graph import SignedBipartiteGraph, select_anchor_side, validate_pq
from .oracle import DEFAULT_MAX_CELLS, biclique_balanced_pairwise, enumerate_bicliques
from .report import CSV_COLUMNS, CountReport, Deadline

try:
    import resource
except ImportError:  # pragma: no cover - non-POSIX
    resource = None

ALGORITHMS = ("oracle", "baseline", "bbwc", "bbvp")


def count_oracle(
    g: SignedBipartiteGraph, p: int, q: int, *, max_cells: int | None = DEFAULT_MAX_CELLS,
    deadline: Deadline = Deadline(None), **_: object,
) -> CountReport:
    t0 = time.perf_counter()
    rep = CountReport("oracle", p, q, None)
    for b in enumerate_bicliques(g, p, q, max_cells):
        deadline.tick()
        rep.bicliques_materialized += 1
        if biclique_balanced_pairwise(b):
            rep.count += 1
        else:
            rep.bicliques_rejected += 1
    rep.wall_ms = (time.perf_counter() - t0) * 1000.0
    return rep


COUNTERS: dict[str, Callable[..., CountReport]] = {
    "oracle": count_oracle,
    "baseline": count_balanced_baseline,
    "bbwc": count_balanced_bbwc,
    "bbvp": count_balanced_bbvp,
}


def _peak_rss_bytes() -> int | None:
    if resource is None:
        return None
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    return peak if sys.platform == "darwin" else peak * 1024


def _chunk_worker(args) -> CountReport:
    algo, g, p, q, anchors, kwargs, limit = args
    return COUNTERS[algo](g, p, q, anchors=anchors, deadline=Deadline(limit), **kwargs)


def run_count(
    g: SignedBipartiteGraph,
    algo: str,
    p: int,
    q: int,
    *,
    anchor_side: str = "auto",
    time_limit: float | None = None,
    check_every: int = 64,
    workers: int = 1,
    memory: str = "rusage",
    **kwargs,
) -> CountReport:
    """Run one counter and attach wall time and a memory figure.

    ``memory`` is ``"rusage"`` (process peak RSS from the OS),
    ``"tracemalloc"`` (Python allocation high-water mark for this run only,
    slows the run down) or ``"none"``.  ``workers > 1`` splits the anchors
    round-robin over processes and adds the partial reports.
    """
    if algo not in COUNTERS:
        raise InvalidParameter(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")
    validate_pq(p, q)
    if algo != "oracle":
        kwargs["anchor_side"] = anchor_side
    if memory == "rusage" and resource is None:
        memory = "tracemalloc"
    if memory == "tracemalloc":
        import tracemalloc

        tracemalloc.start()

    t0 = time.perf_counter()
    try:
        if workers > 1 and algo != "oracle":
            side = select_anchor_side(g, anchor_side)
            size = g.size(side)
            jobs = [
                (algo, g, p, q, range(i, size, workers), kwargs, time_limit) for i in range(workers)
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_chunk_worker, jobs))
            rep = parts[0]
            for part in parts[1:]:
                rep = rep.merge(part)
        else:
            rep = COUNTERS[algo](g, p, q, deadline=Deadline(time_limit, check_every), **kwargs)
    finally:
        if memory == "tracemalloc":
            _, peak = tracemalloc.get_traced_memory()
            tracemalloc.stop()
    rep.wall_ms = (time.perf_counter() - t0) * 1000.0
    if memory == "tracemalloc":
        rep.peak_mem_bytes, rep.mem_method = peak, "tracemalloc"
    elif memory == "rusage":
        rep.peak_mem_bytes, rep.mem_method = _peak_rss_bytes(), "ru_maxrss"
    return rep


# -- benchmark plans ---------------------------------------------------------

@dataclass
class BenchRow:
    dataset: str
    algo: str
    p: int
    q: int
    repetition: int
    status: str  # ok | inf | error
    report: CountReport | None = None
    error: str | None = None

    def as_csv_row(self) -> dict:
        r = self.report
        row = dict.fromkeys(CSV_COLUMNS, "")
        row.update(dataset=self.dataset, algo=self.algo, p=self.p, q=self.q, status=self.status)
        if r is not None:
            row.update(
                count=r.count, wedges=r.wedges, subsets=r.subsets, intersections=r.intersections,
                bicliques_materialized=r.bicliques_materialized, wall_ms=f"{r.wall_ms:.3f}",
                peak_mem_bytes="" if r.peak_mem_bytes is None else r.peak_mem_bytes,
            )
        return row

    def as_json(self) -> dict:
        d = {"dataset": self.dataset, "algo": self.algo, "p": self.p, "q": self.q,
             "repetition": self.repetition, "status": self.status}
        if self.report is not None:
            d.update(self.report.as_dict())
            d["algo"] = d.pop("algorithm")
        if self.error:
            d["error"] = self.error
        return d


@dataclass
class BenchPlan:
    inputs: Sequence[tuple[str, SignedBipartiteGraph]]
    algorithms: Sequence[str] = ("baseline", "bbwc", "bbvp")
    grid: Sequence[tuple[int, int]] = field(
        default_factory=lambda: [(p, q) for p in (3, 4, 5) for q in (3, 4, 5, 6, 7)]
    )
    repetitions: int = 1
    time_limit: float = 5 * 3600.0
    check_every: int = 64
    anchor_side: str = "auto"

    def __post_init__(self):
        if self.time_limit <= 0:
            raise InvalidParameter("time limit must be positive")
        if self.repetitions < 1:
            raise InvalidParameter("need at least one repetition")
        for a in self.algorithms:
            if a not in COUNTERS:
                raise InvalidParameter(f"unknown algorithm {a!r}")
        for p, q in self.grid:
            validate_pq(p, q)

    def cells(self) -> Iterator[tuple[str, SignedBipartiteGraph, str, int, int, int]]:
        for name, g in self.inputs:
            for algo in self.algorithms:
                for p, q in self.grid:
                    for rep in range(self.repetitions):
                        yield name, g, algo, p, q, rep


def _bench_cell(plan: BenchPlan, cell) -> BenchRow:
    name, g, algo, p, q, rep = cell
    try:
        r = run_count(g, algo, p, q, anchor_side=plan.anchor_side, time_limit=plan.time_limit,
                      check_every=plan.check_every)
    except TimeLimitExceeded:
        return BenchRow(name, algo, p, q, rep, "inf")
    except Exception as exc:  # a failed row must not lose the rest of the table
        return BenchRow(name, algo, p, q, rep, "error", error=f"{type(exc).__name__}: {exc}")
    return BenchRow(name, algo, p, q, rep, "ok", r)


def run_bench(plan: BenchPlan, workers: int = 1) -> Iterator[BenchRow]:
    """Rows in plan order, yielded as soon as they finish."""
    cells = list(plan.cells())
    if workers <= 1:
        for cell in cells:
            yield _bench_cell(plan, cell)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_bench_cell, [plan] * len(cells), cells)


def write_rows(rows: Iterable[BenchRow], out: TextIO, fmt: str = "csv") -> int:
    """Stream rows to ``out``; returns how many were written.

    Rows are flushed one by one, so an interrupted bench keeps what it has.
    """
    n = 0
    writer = None
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
    try:
        for row in rows:
            if writer is not None:
                writer.writerow(row.as_csv_row())
            else:
                out.write(json.dumps(row.as_json()) + "\n")
            out.flush()
            n += 1
    except KeyboardInterrupt:
        out.flush()
    return n
