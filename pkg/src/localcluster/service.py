"""HTTP JSON service exposing clustering over a loaded graph.

The graph is immutable and shared; every request is stateless, so any number
of concurrent requests produce the same responses as serial execution when
rng seeds are fixed. All payloads carry a top-level "v": 1 version key.
"""

from __future__ import annotations

import json
import time
from importlib import resources

import jsonschema
import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .diffusion import DiffusionParams, ParamError, run_diffusion
from .graph import Graph, conductance, volume
from .sparsevec import SparseVec
from .sweep import EmptySweepInput, sweep_sequential

API_VERSION = 1


def load_request_schema() -> dict:
    with resources.files("localcluster.schemas").joinpath("cluster_request.json").open() as f:
        return json.load(f)


class RequestError(ValueError):
    def __init__(self, code: str, message: str, field_name: str | None = None):
        self.code = code
        self.field = field_name
        super().__init__(message)

    def body(self) -> dict:
        return {"v": API_VERSION, "code": self.code, "message": str(self), "field": self.field}


def _params_from_request(g: Graph, body: dict, schema: dict) -> tuple[DiffusionParams, bool]:
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(body), key=lambda e: list(e.path))
    if errors:
        err = errors[0]
        field_name = str(err.path[0]) if err.path else (
            err.validator_value[0] if err.validator == "required" else None
        )
        raise RequestError("invalid_request", err.message, field_name)
    run_sweep = body.pop("run_sweep", True)
    params = DiffusionParams(**body)
    try:
        params.validate(g.n)
    except ParamError as exc:
        raise RequestError("invalid_params", str(exc), exc.field) from exc
    return params, run_sweep


def execute_cluster(g: Graph, params: DiffusionParams, run_sweep: bool = True) -> dict:
    """Run one diffusion plus optional sweep and assemble the response dict.

    The reported conductance is recomputed independently from the returned
    vertex set, never read off the sweep profile.
    """
    t0 = time.perf_counter()
    result = run_diffusion(g, params)
    t1 = time.perf_counter()
    sweep_curve: list[tuple[int, float]] = []
    if run_sweep:
        try:
            profile = sweep_sequential(g, result.p)
        except EmptySweepInput:
            profile = None
        if profile is not None:
            cluster = sorted(profile.best_set)
            sweep_curve = [
                (j + 1, float(c)) for j, c in enumerate(profile.prefix_conductance)
            ]
        else:
            cluster = sorted(v for v, m in result.p.entries() if m > 0)
    else:
        cluster = sorted(v for v, m in result.p.entries() if m > 0)
    t2 = time.perf_counter()
    return {
        "v": API_VERSION,
        "cluster": cluster,
        "conductance": conductance(g, cluster) if cluster else 1.0,
        "cluster_volume": volume(g, cluster) if cluster else 0,
        "support_size": len(result.p),
        "sweep_curve": sweep_curve,
        "push_count": result.push_count,
        "pushed_volume": result.pushed_volume,
        "iterations": result.iterations,
        "wall_time_ms": {
            "diffusion": (t1 - t0) * 1000.0,
            "sweep": (t2 - t1) * 1000.0,
        },
    }


def graph_stats(g: Graph) -> dict:
    degs = g.degrees
    hist: dict[str, int] = {}
    if g.n:
        zero = int((degs == 0).sum())
        if zero:
            hist["0"] = zero
        nz = degs[degs > 0]
        if len(nz):
            buckets = np.floor(np.log2(nz)).astype(int)
            for b in sorted(set(buckets.tolist())):
                lo, hi = 2**b, 2 ** (b + 1) - 1
                hist[f"{lo}-{hi}"] = int((buckets == b).sum())
    return {
        "v": API_VERSION,
        "n": g.n,
        "m": g.m,
        "max_degree": int(degs.max()) if g.n else 0,
        "degree_histogram": hist,
    }


def create_app(g: Graph) -> FastAPI:
    app = FastAPI(title="localcluster")
    schema = load_request_schema()

    @app.exception_handler(RequestError)
    async def request_error_handler(_: Request, exc: RequestError):
        return JSONResponse(status_code=400, content=exc.body())

    @app.get("/api/v1/graph")
    async def get_graph():
        return graph_stats(g)

    @app.get("/api/v1/vertex/{vertex_id}/neighbors")
    async def get_neighbors(vertex_id: int, limit: int = 50):
        if not 0 <= vertex_id < g.n:
            raise RequestError("out_of_range", f"vertex {vertex_id} out of range", "vertex_id")
        ngh = g.neighbors_of(vertex_id)[: max(limit, 0)]
        return {
            "v": API_VERSION,
            "vertex": vertex_id,
            "degree": g.degree(vertex_id),
            "neighbors": [int(w) for w in ngh],
        }

    @app.post("/api/v1/cluster")
    async def post_cluster(request: Request):
        body = await request.json()
        params, run_sweep = _params_from_request(g, dict(body), schema)
        return execute_cluster(g, params, run_sweep)

    @app.post("/api/v1/sweep")
    async def post_sweep(request: Request):
        body = await request.json()
        entries = body.get("p")
        if not isinstance(entries, list) or not entries:
            raise RequestError("invalid_request", "p must be a non-empty list of [vertex, mass]", "p")
        vec = SparseVec()
        for item in entries:
            try:
                v, mass = int(item[0]), float(item[1])
            except (TypeError, ValueError, IndexError):
                raise RequestError("invalid_request", f"bad p entry {item!r}", "p") from None
            if not 0 <= v < g.n:
                raise RequestError("out_of_range", f"vertex {v} out of range", "p")
            vec.assign(v, mass)
        try:
            profile = sweep_sequential(g, vec)
        except EmptySweepInput as exc:
            raise RequestError("empty_sweep", str(exc), "p") from None
        return {
            "v": API_VERSION,
            "order": profile.order,
            "prefix_volume": profile.prefix_volume.tolist(),
            "prefix_crossing": profile.prefix_crossing.tolist(),
            "prefix_conductance": profile.prefix_conductance.tolist(),
            "best_index": profile.best_index,
            "best_set": profile.best_set,
        }

    return app
