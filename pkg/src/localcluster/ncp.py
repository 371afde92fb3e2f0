"""Network community profile: best conductance seen per cluster-size bucket
across many (seed, parameter) runs."""

from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .diffusion import DiffusionParams, run_diffusion
from .graph import Graph
from .sweep import EmptySweepInput, sweep_sequential

logger = logging.getLogger(__name__)

CSV_HEADER = [
    "bucket_min_size",
    "cluster_size",
    "conductance",
    "seed",
    "algorithm",
    "alpha",
    "epsilon",
    "t",
    "N",
    "K",
    "T",
]


@dataclass(frozen=True)
class NcpRecord:
    cluster_size: int
    conductance: float
    seed: int
    params: DiffusionParams


@dataclass
class NcpProfile:
    """Power-of-two size buckets, each keeping its minimum-conductance record."""

    buckets: dict[int, NcpRecord] = field(default_factory=dict)
    failures: int = 0

    def fold(self, record: NcpRecord) -> None:
        b = bucket_of(record.cluster_size)
        cur = self.buckets.get(b)
        if cur is None or record.conductance < cur.conductance:
            self.buckets[b] = record

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER)
        for b in sorted(self.buckets):
            rec = self.buckets[b]
            pr = rec.params
            writer.writerow(
                [
                    2**b,
                    rec.cluster_size,
                    repr(rec.conductance),
                    rec.seed,
                    pr.algorithm,
                    pr.alpha,
                    pr.epsilon,
                    pr.t,
                    pr.taylor_degree if pr.algorithm == "hkpr" else pr.num_walks,
                    pr.max_walk_len,
                    pr.max_iters,
                ]
            )
        return out.getvalue()


def bucket_of(size: int) -> int:
    """floor(log2(size)) for size >= 1."""
    if size < 1:
        raise ValueError("cluster size must be >= 1")
    return size.bit_length() - 1


def run_single(g: Graph, seed: int, params: DiffusionParams) -> NcpRecord:
    p = DiffusionParams(**{**params.__dict__, "seed": seed})
    result = run_diffusion(g, p)
    profile = sweep_sequential(g, result.p)
    return NcpRecord(
        cluster_size=len(profile.best_set),
        conductance=float(profile.prefix_conductance[profile.best_index - 1]),
        seed=seed,
        params=p,
    )


def run_ncp(
    g: Graph,
    seeds: list[int],
    param_grid: list[DiffusionParams],
    threads: int = 1,
) -> NcpProfile:
    """Run every (seed, params) pair, sweep each result, fold minima into
    buckets. Pairs are independent; individual failures (e.g. isolated
    seeds) are counted and skipped. The fold is a commutative min, so the
    profile does not depend on completion order.
    """
    if not seeds or not param_grid:
        raise ValueError("seeds and param_grid must be non-empty")
    profile = NcpProfile()
    jobs = [(s, pr) for s in seeds for pr in param_grid]

    def attempt(job):
        s, pr = job
        try:
            return run_single(g, s, pr)
        except (EmptySweepInput, ValueError) as exc:
            logger.warning("ncp run (seed=%d, algo=%s) skipped: %s", s, pr.algorithm, exc)
            return None

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(attempt, jobs))
    else:
        records = [attempt(j) for j in jobs]
    for rec in records:
        if rec is None:
            profile.failures += 1
        else:
            profile.fold(rec)
    return profile


def default_param_grid() -> list[DiffusionParams]:
    """PR-Nibble over a small alpha/epsilon grid; a documented default, not
    a tuned choice."""
    return [
        DiffusionParams(algorithm="pr_nibble_optimized", seed=0, alpha=a, epsilon=e)
        for a in (0.001, 0.01, 0.1)
        for e in (1e-5, 1e-6, 1e-7)
    ]
