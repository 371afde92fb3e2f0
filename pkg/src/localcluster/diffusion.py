"""Seed diffusion algorithms: Nibble, PR-Nibble, deterministic and randomized
heat-kernel PageRank.

Every algorithm returns a DiffusionResult whose vector p is handed to the
sweep module for rounding. Each has a sequential reference mode and a
frontier-based parallel mode; the parallel modes use atomic accumulation
within an iteration and barriers between iterations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .frontier import Frontier, edge_map, frontier_filter, vertex_map
from .graph import Graph
from .sparsevec import SparseVec

ALGORITHMS = (
    "nibble",
    "pr_nibble_original",
    "pr_nibble_optimized",
    "hkpr",
    "rand_hkpr",
)

Mode = Literal["sequential", "parallel"]


class ParamError(ValueError):
    """Invalid diffusion parameter; carries the offending field name."""

    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(message)


class WorkBoundExceeded(RuntimeError):
    """PR-Nibble pushed more volume than the 1/(alpha*eps) bound allows."""


@dataclass
class DiffusionParams:
    """Algorithm selector plus every tunable any of the algorithms needs."""

    algorithm: str
    seed: int
    epsilon: float = 1e-6
    alpha: float = 0.1  # teleportation, PR-Nibble
    max_iters: int = 10  # iteration cap T, Nibble
    t: float = 1.0  # heat-kernel temperature
    taylor_degree: int = 5  # series truncation, deterministic HK-PR
    num_walks: int = 1000  # randomized HK-PR
    max_walk_len: int = 10  # walk-length clamp K
    rng_seed: int = 0
    hkpr_threshold_uses_exp_t: bool = False

    def validate(self, n: int) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ParamError("algorithm", f"unknown algorithm {self.algorithm!r}")
        if not 0 <= self.seed < n:
            raise ParamError("seed", f"seed {self.seed} out of range [0, {n})")
        if self.algorithm in ("nibble", "pr_nibble_original", "pr_nibble_optimized", "hkpr"):
            if not self.epsilon > 0:
                raise ParamError("epsilon", "epsilon must be > 0")
        if self.algorithm.startswith("pr_nibble") and not 0 < self.alpha < 1:
            raise ParamError("alpha", "alpha must be in (0, 1)")
        if self.algorithm == "nibble" and self.max_iters < 1:
            raise ParamError("max_iters", "max_iters must be >= 1")
        if self.algorithm in ("hkpr", "rand_hkpr") and not self.t > 0:
            raise ParamError("t", "t must be > 0")
        if self.algorithm == "hkpr" and self.taylor_degree < 1:
            raise ParamError("taylor_degree", "taylor_degree must be >= 1")
        if self.algorithm == "rand_hkpr":
            if self.num_walks < 1:
                raise ParamError("num_walks", "num_walks must be >= 1")
            if self.max_walk_len < 0:
                raise ParamError("max_walk_len", "max_walk_len must be >= 0")


@dataclass
class DiffusionResult:
    """Mass vector plus the work counters that certify locality."""

    p: SparseVec
    iterations: int = 0
    push_count: int = 0
    pushed_volume: int = 0
    entries_created: int = 0
    residual: SparseVec | None = None
    hkpr_threshold_uses_exp_t: bool | None = None
    walk_counts: dict[int, int] | None = None


def run_diffusion(
    g: Graph, params: DiffusionParams, mode: Mode = "sequential", threads: int = 1
) -> DiffusionResult:
    """Dispatch to the selected algorithm after validating parameters."""
    params.validate(g.n)
    if params.algorithm == "nibble":
        return nibble(g, params, mode=mode, threads=threads)
    if params.algorithm in ("pr_nibble_original", "pr_nibble_optimized"):
        return pr_nibble(g, params, mode=mode, threads=threads)
    if params.algorithm == "hkpr":
        return hkpr(g, params, mode=mode, threads=threads)
    return rand_hkpr(g, params, mode=mode)


def _above_threshold(g: Graph, vec: SparseVec, epsilon: float):
    """Frontier predicate: mass at least degree * epsilon, degree-0 excluded.

    Degree-0 vertices can never push (no edges to spread over), so admitting
    them would spin forever against a zero threshold.
    """

    def pred(v: int) -> bool:
        d = g.degree(v)
        return d > 0 and vec.read(v) >= d * epsilon

    return pred


# ---------------------------------------------------------------------------
# Nibble: truncated lazy random walk
# ---------------------------------------------------------------------------


def nibble(
    g: Graph,
    params: DiffusionParams,
    mode: Mode = "sequential",
    threads: int = 1,
    iter_callback=None,
) -> DiffusionResult:
    """Run the truncated lazy-walk diffusion for up to max_iters iterations.

    Each iteration keeps half of every active vertex's mass and spreads the
    other half evenly over its neighbors; vertices whose new mass falls below
    degree * epsilon drop out. If the active set empties, the vector from
    before the final sub-threshold update is returned.
    ``iter_callback(p_next, frontier)`` fires after each iteration's filter.
    """
    params.validate(g.n)
    x, eps, big_t = params.seed, params.epsilon, params.max_iters
    p = SparseVec([(x, 1.0)])
    frontier = Frontier([x])
    res = DiffusionResult(p=p)
    entries = p.created
    for _ in range(big_t):
        res.iterations += 1
        p_next = SparseVec()
        if mode == "parallel":
            vertex_map(frontier, lambda v: p_next.assign(v, p.read(v) / 2), threads)
            touched = edge_map(
                g,
                frontier,
                lambda s, d: p_next.accumulate(d, p.read(s) / (2 * g.degree(s))),
                threads,
            )
        else:
            touched = []
            for v in frontier:
                p_next.assign(v, p.read(v) / 2)
            for s in frontier:
                if g.degree(s) == 0:
                    continue
                share = p.read(s) / (2 * g.degree(s))
                for d in g.neighbors_of(s):
                    p_next.accumulate(int(d), share)
                    touched.append(int(d))
        res.push_count += len(frontier)
        res.pushed_volume += len(touched)
        entries += p_next.created
        candidates = list(frontier.vertices) + touched
        frontier = frontier_filter(candidates, _above_threshold(g, p_next, eps))
        if iter_callback is not None:
            iter_callback(p_next, frontier)
        if len(frontier) == 0:
            break  # return the pre-update vector
        p = p_next
    res.p = p
    res.entries_created = entries
    return res


# ---------------------------------------------------------------------------
# PR-Nibble: approximate personalized PageRank via pushes
# ---------------------------------------------------------------------------


def pr_nibble(
    g: Graph,
    params: DiffusionParams,
    mode: Mode = "sequential",
    threads: int = 1,
    iter_callback=None,
) -> DiffusionResult:
    """Push residual mass until every vertex holds less than degree * epsilon.

    Original rule per push on v: p[v] += alpha*r[v]; each neighbor gains
    (1-alpha)*r[v]/(2d(v)); r[v] becomes (1-alpha)*r[v]/2. Optimized rule:
    p[v] += (2*alpha/(1+alpha))*r[v]; each neighbor gains
    ((1-alpha)/(1+alpha))*r[v]/d(v); r[v] becomes 0. Both conserve
    |p| + |r| = 1.

    The total degree mass pushed is bounded by 1/(alpha*epsilon); exceeding
    it means the implementation is broken, so it raises rather than looping.
    ``iter_callback(p, r)`` fires after every push (sequential) or iteration
    (parallel), which is how the conservation tests observe interior state.
    """
    params.validate(g.n)
    optimized = params.algorithm == "pr_nibble_optimized"
    x, eps, alpha = params.seed, params.epsilon, params.alpha
    bound = 1.0 / (alpha * eps)
    if mode == "sequential":
        return _pr_nibble_queue(g, x, eps, alpha, optimized, bound, iter_callback)
    return _pr_nibble_parallel(g, x, eps, alpha, optimized, bound, threads, iter_callback)


def _pr_push_amounts(alpha: float, optimized: bool) -> tuple[float, float, float]:
    """(fraction to p, per-degree fraction to each neighbor, fraction kept)."""
    if optimized:
        return 2 * alpha / (1 + alpha), (1 - alpha) / (1 + alpha), 0.0
    return alpha, (1 - alpha) / 2, (1 - alpha) / 2


def _pr_nibble_queue(
    g: Graph,
    x: int,
    eps: float,
    alpha: float,
    optimized: bool,
    bound: float,
    iter_callback=None,
) -> DiffusionResult:
    """FIFO queue reference: repeatedly push the front vertex until it drops
    below threshold, enqueueing neighbors as they cross it."""
    from collections import deque

    to_p, to_ngh, keep = _pr_push_amounts(alpha, optimized)
    p, r = SparseVec(), SparseVec([(x, 1.0)])
    res = DiffusionResult(p=p, residual=r)
    if g.degree(x) == 0 or r.read(x) < g.degree(x) * eps:
        res.entries_created = p.created + r.created
        return res
    queue: deque[int] = deque([x])
    queued = {x}
    while queue:
        v = queue[0]
        dv = g.degree(v)
        while r.read(v) >= dv * eps:
            rv = r.read(v)
            p.accumulate(v, to_p * rv)
            r.assign(v, keep * rv)
            share = to_ngh * rv / dv
            for w in g.neighbors_of(v):
                w = int(w)
                r.accumulate(w, share)
                dw = g.degree(w)
                if w not in queued and r.read(w) >= dw * eps:
                    queue.append(w)
                    queued.add(w)
            res.push_count += 1
            res.pushed_volume += dv
            res.iterations += 1
            if res.pushed_volume > bound:
                raise WorkBoundExceeded(
                    f"pushed_volume {res.pushed_volume} > 1/(alpha*eps) = {bound}"
                )
            if iter_callback is not None:
                iter_callback(p, r)
        queue.popleft()
        queued.discard(v)
    res.entries_created = p.created + r.created
    return res


def _pr_nibble_parallel(
    g: Graph,
    x: int,
    eps: float,
    alpha: float,
    optimized: bool,
    bound: float,
    threads: int,
    iter_callback=None,
) -> DiffusionResult:
    """Frontier-synchronous version: all above-threshold vertices push their
    start-of-iteration residual at once; r' is swapped in at the barrier."""
    to_p, to_ngh, keep = _pr_push_amounts(alpha, optimized)
    p, r = SparseVec(), SparseVec([(x, 1.0)])
    res = DiffusionResult(p=p, residual=r)
    new_r_entries = r.created
    frontier = (
        Frontier([x]) if g.degree(x) > 0 and r.read(x) >= g.degree(x) * eps else Frontier([])
    )
    while len(frontier) > 0:
        res.iterations += 1
        r_next = r.copy()  # untouched residuals carry over
        carried = r_next.created

        def update_self(v: int) -> None:
            rv = r.read(v)
            p.accumulate(v, to_p * rv)
            r_next.assign(v, keep * rv)

        def update_ngh(s: int, d: int) -> None:
            r_next.accumulate(d, to_ngh * r.read(s) / g.degree(s))

        vertex_map(frontier, update_self, threads)
        touched = edge_map(g, frontier, update_ngh, threads)
        res.push_count += len(frontier)
        res.pushed_volume += len(touched)
        if res.pushed_volume > bound:
            raise WorkBoundExceeded(
                f"pushed_volume {res.pushed_volume} > 1/(alpha*eps) = {bound}"
            )
        new_r_entries += r_next.created - carried
        candidates = list(frontier.vertices) + touched
        r = r_next
        res.residual = r
        if iter_callback is not None:
            iter_callback(p, r)
        frontier = frontier_filter(candidates, _above_threshold(g, r, eps))
    res.entries_created = p.created + new_r_entries
    return res


# ---------------------------------------------------------------------------
# Deterministic heat-kernel PageRank
# ---------------------------------------------------------------------------


def compute_psi(degree: int, t: float) -> list[float]:
    """Taylor-tail weights psi_k = sum_{m=0}^{N-k} k!/(m+k)! * t^m, k = 0..N.

    Terms are accumulated with the recurrence term_{m+1} = term_m * t/(k+m+1)
    so no factorial is ever materialized.
    """
    values = []
    for k in range(degree + 1):
        total, term = 1.0, 1.0
        for m in range(1, degree - k + 1):
            term *= t / (k + m)
            total += term
        values.append(total)
    return values


def _hk_threshold(eps: float, big_n: int, t: float, psi_next: float, use_exp_t: bool) -> float:
    scale = math.exp(t) if use_exp_t else math.exp(-t)
    return scale * eps / (2 * big_n * psi_next)


def hkpr(
    g: Graph, params: DiffusionParams, mode: Mode = "sequential", threads: int = 1
) -> DiffusionResult:
    """Deterministic heat-kernel PageRank via truncated-series pushes.

    Levels j = 0..N-1 deposit each active vertex's residual into p and spread
    t*r[v]/((j+1)*d(v)) to neighbor residuals; the last level instead spreads
    r[v]/d(v) straight into p. The parallel mode processes a whole level per
    iteration and applies exactly the same updates as the sequential queue,
    so both return the same vector.
    """
    params.validate(g.n)
    x, eps, big_n, t = params.seed, params.epsilon, params.taylor_degree, params.t
    use_exp_t = params.hkpr_threshold_uses_exp_t
    psi = compute_psi(big_n, t)
    if mode == "sequential":
        res = _hkpr_queue(g, x, eps, big_n, t, psi, use_exp_t)
    else:
        res = _hkpr_parallel(g, x, eps, big_n, t, psi, use_exp_t, threads)
    res.hkpr_threshold_uses_exp_t = use_exp_t
    return res


def _hkpr_queue(
    g: Graph, x: int, eps: float, big_n: int, t: float, psi: list[float], use_exp_t: bool
) -> DiffusionResult:
    """FIFO queue over (vertex, level) entries; a neighbor is enqueued the
    moment its accumulating residual crosses the admission threshold."""
    from collections import deque

    p = SparseVec()
    r: dict[tuple[int, int], float] = {(x, 0): 1.0}
    queue: deque[tuple[int, int]] = deque([(x, 0)])
    res = DiffusionResult(p=p)
    r_entries = 1
    while queue:
        v, j = queue.popleft()
        rv = r[(v, j)]
        p.accumulate(v, rv)
        dv = g.degree(v)
        res.push_count += 1
        res.pushed_volume += dv
        if dv == 0:
            continue
        if j + 1 == big_n:
            for w in g.neighbors_of(v):
                p.accumulate(int(w), rv / dv)
        else:
            mass = t * rv / ((j + 1) * dv)
            thr = _hk_threshold(eps, big_n, t, psi[j + 1], use_exp_t)
            for w in g.neighbors_of(v):
                w = int(w)
                old = r.get((w, j + 1), 0.0)
                if old == 0.0:
                    r_entries += 1
                if old < g.degree(w) * thr <= old + mass:
                    queue.append((w, j + 1))
                r[(w, j + 1)] = old + mass
        res.iterations = max(res.iterations, j + 1)
    res.entries_created = p.created + r_entries
    return res


def _hkpr_parallel(
    g: Graph,
    x: int,
    eps: float,
    big_n: int,
    t: float,
    psi: list[float],
    use_exp_t: bool,
    threads: int,
) -> DiffusionResult:
    p = SparseVec()
    r = SparseVec([(x, 1.0)])
    frontier = Frontier([x])
    res = DiffusionResult(p=p)
    entries = r.created
    j = 0
    while len(frontier) > 0:
        res.iterations += 1
        vertex_map(frontier, lambda v: p.accumulate(v, r.read(v)), threads)
        res.push_count += len(frontier)
        res.pushed_volume += sum(g.degree(v) for v in frontier)
        if j + 1 < big_n:
            r_next = SparseVec()

            def update_ngh(s: int, d: int) -> None:
                r_next.accumulate(d, t * r.read(s) / ((j + 1) * g.degree(s)))

            touched = edge_map(g, frontier, update_ngh, threads)
            thr = _hk_threshold(eps, big_n, t, psi[j + 1], use_exp_t)
            r = r_next
            frontier = frontier_filter(
                touched, lambda v: r.read(v) >= g.degree(v) * thr
            )
            entries += r.created
            j += 1
        else:  # last level: spread straight into p
            edge_map(
                g,
                frontier,
                lambda s, d: p.accumulate(d, r.read(s) / g.degree(s)),
                threads,
            )
            break
    res.entries_created = entries + p.created
    return res


# ---------------------------------------------------------------------------
# Randomized heat-kernel PageRank
# ---------------------------------------------------------------------------


def clamped_poisson_pmf(t: float, max_len: int) -> np.ndarray:
    """Poisson(t) probabilities for 0..max_len-1 with all tail mass on max_len."""
    ks = np.arange(max_len + 1)
    with np.errstate(divide="ignore"):
        log_pmf = -t + ks * np.log(t) if t > 0 else np.where(ks == 0, 0.0, -np.inf)
    if t > 0:
        log_pmf = log_pmf - np.cumsum(np.log(np.maximum(ks, 1)))
        pmf = np.exp(log_pmf)
    else:
        pmf = np.where(ks == 0, 1.0, 0.0).astype(float)
    pmf[max_len] = max(0.0, 1.0 - pmf[:max_len].sum())
    return pmf


def sample_walk_length(t: float, max_len: int, rng: np.random.Generator) -> int:
    """Draw a walk length: Poisson(t) for k < max_len, remaining mass on max_len."""
    if max_len == 0 or t == 0:
        return 0
    return int(_lengths_from_uniforms(t, max_len, np.array([rng.random()]))[0])


def _lengths_from_uniforms(t: float, max_len: int, u: np.ndarray) -> np.ndarray:
    cdf = np.cumsum(clamped_poisson_pmf(t, max_len))
    return np.searchsorted(cdf, u, side="right").clip(0, max_len)


def _walk_endpoints(g: Graph, params: DiffusionParams) -> np.ndarray:
    """Endpoint of every walk, deterministic in (rng_seed, walk index).

    All walks consume rows of one counter-based random block (Philox), so the
    sequential and parallel tallies see identical endpoints.
    """
    n_walks, k = params.num_walks, params.max_walk_len
    rng = np.random.Generator(np.random.Philox(key=params.rng_seed))
    draws = rng.random((n_walks, k + 1))
    lengths = (
        _lengths_from_uniforms(params.t, k, draws[:, 0])
        if k > 0 and params.t > 0
        else np.zeros(n_walks, dtype=np.int64)
    )
    cur = np.full(n_walks, params.seed, dtype=np.int64)
    degs = g.degrees
    for step in range(1, k + 1):
        active = (lengths >= step) & (degs[cur] > 0)
        if not active.any():
            break
        c = cur[active]
        pick = g.offsets[c] + (draws[active, step] * degs[c]).astype(np.int64)
        cur[active] = g.neighbors[pick]
    return cur


def _tally_endpoints(endpoints: np.ndarray) -> list[tuple[int, int]]:
    """Count walks per endpoint by the dense-relabel + integer-sort +
    prefix-scan + filter scheme (the naive shared-counter tally contends)."""
    relabel: dict[int, int] = {}
    for v in endpoints.tolist():
        if v not in relabel:
            relabel[v] = len(relabel)
    inverse = {i: v for v, i in relabel.items()}
    mapped = np.fromiter((relabel[v] for v in endpoints.tolist()), dtype=np.int64)
    sorted_ids = np.sort(mapped, kind="stable")
    is_start = np.empty(len(sorted_ids), dtype=bool)
    is_start[0] = True
    np.not_equal(sorted_ids[1:], sorted_ids[:-1], out=is_start[1:])
    starts = np.flatnonzero(is_start)
    counts = np.diff(np.append(starts, len(sorted_ids)))
    return [(inverse[int(sorted_ids[s])], int(c)) for s, c in zip(starts, counts)]


def rand_hkpr(g: Graph, params: DiffusionParams, mode: Mode = "sequential") -> DiffusionResult:
    """Monte-Carlo heat-kernel PageRank: endpoint frequencies of random walks.

    Walk lengths follow the clamped Poisson distribution; each step moves to
    a uniformly random neighbor, halting early at degree-0 vertices. Returns
    p = counts / num_walks. The sequential mode increments a sparse counter
    per walk; the parallel mode tallies the shared endpoint array in bulk.
    Both modes are deterministic given rng_seed and agree exactly.
    """
    params.validate(g.n)
    endpoints = _walk_endpoints(g, params)
    n_walks = params.num_walks
    p = SparseVec()
    res = DiffusionResult(p=p, iterations=1, push_count=n_walks)
    if mode == "sequential":
        counter = SparseVec()
        for v in endpoints.tolist():
            counter.accumulate(int(v), 1.0)
        pairs = [(v, int(c)) for v, c in counter.entries()]
    else:
        pairs = _tally_endpoints(endpoints)
    assert sum(c for _, c in pairs) == n_walks
    for v, c in pairs:
        p.assign(v, c / n_walks)
    res.walk_counts = {v: c for v, c in pairs}
    res.entries_created = p.created
    res.pushed_volume = int(np.sum(g.degrees[endpoints]))
    return res
