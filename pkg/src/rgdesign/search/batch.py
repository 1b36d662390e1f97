"""Run a pipeline of search stages over a stream of graph6 records."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import FormatError, PreconditionViolated
from ..graph import from_graph6, girth, regularity
from .algorithms import ALGORITHMS, Status

__all__ = ["BatchRecord", "BatchReport", "batch", "parse_pipeline"]


@dataclass(frozen=True)
class BatchRecord:
    index: int
    n: int | None
    delta: int | None
    outcome: str  # Exists, NotExists, Inconclusive, Skipped or Error
    stage: str
    nodes: int
    millis: int
    message: str = ""

    def line(self) -> str:
        fields = [self.index, "-" if self.n is None else self.n, "-" if self.delta is None else self.delta,
                  self.outcome, self.stage, self.nodes, self.millis]
        return "\t".join(map(str, fields))


@dataclass(frozen=True)
class BatchReport:
    records: tuple

    def tally(self, outcome: str) -> int:
        return sum(1 for r in self.records if r.outcome == outcome)

    @property
    def errors(self) -> int:
        return self.tally("Error")

    def summary(self) -> str:
        return (f"# summary exists={self.tally('Exists')} notexists={self.tally('NotExists')} "
                f"inconclusive={self.tally('Inconclusive')} errors={self.errors} "
                f"skipped={self.tally('Skipped')}")

    def render(self) -> str:
        return "".join(r.line() + "\n" for r in self.records) + self.summary() + "\n"


def parse_pipeline(spec: str | Sequence[str]) -> tuple[str, ...]:
    stages = spec.split(",") if isinstance(spec, str) else list(spec)
    stages = tuple(s.strip().lower() for s in stages if s.strip())
    unknown = [s for s in stages if s not in ALGORITHMS]
    if unknown or not stages:
        raise ValueError(f"unknown pipeline stage(s) {unknown}; choose from {sorted(ALGORITHMS)}")
    return stages


def _run_one(args) -> BatchRecord:
    index, record, pipeline, budget = args
    start = time.perf_counter()

    def ms():
        return int((time.perf_counter() - start) * 1000)

    try:
        g = from_graph6(record)
    except FormatError as exc:
        return BatchRecord(index, None, None, "Error", "-", 0, ms(), str(exc))
    delta = regularity(g)
    if delta is None or girth(g) < 5:
        return BatchRecord(index, g.n, delta, "Skipped", "-", 0, ms(), "not regular with girth >= 5")
    nodes = 0
    last = "-"
    for stage in pipeline:
        try:
            out = ALGORITHMS[stage](g, budget=budget)
        except PreconditionViolated:
            continue
        nodes += out.nodes
        last = out.stage
        if out.status is not Status.INCONCLUSIVE:
            return BatchRecord(index, g.n, delta, str(out.status), out.stage, nodes, ms())
    return BatchRecord(index, g.n, delta, "Inconclusive", last, nodes, ms())


def batch(lines: Iterable[str], pipeline: Sequence[str] = ("a", "cover"), budget: int | None = None,
          jobs: int = 1) -> BatchReport:
    """Decide every graph in a graph6 stream, stopping each at its first decisive stage.

    Records are returned in input order whatever ``jobs`` is.
    """
    pipeline = parse_pipeline(pipeline)
    work = [(i, ln.strip(), pipeline, budget) for i, ln in enumerate(ln for ln in lines if ln.strip())]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        records = [_run_one(w) for w in work]
    return BatchReport(tuple(records))
