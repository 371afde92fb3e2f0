"""Shared-memory local graph clustering: seed diffusions plus sweep-cut rounding."""

from .diffusion import (
    ALGORITHMS,
    DiffusionParams,
    DiffusionResult,
    ParamError,
    WorkBoundExceeded,
    compute_psi,
    hkpr,
    nibble,
    pr_nibble,
    rand_hkpr,
    run_diffusion,
    sample_walk_length,
)
from .frontier import Frontier, edge_map, frontier_filter, vertex_map
from .graph import (
    EdgeListParseError,
    Graph,
    GraphFormatError,
    boundary,
    build_graph,
    conductance,
    parse_edge_list,
    read_binary,
    volume,
    write_binary,
)
from .ncp import NcpProfile, NcpRecord, bucket_of, run_ncp
from .sparsevec import SparseVec
from .sweep import (
    EmptySweepInput,
    SweepProfile,
    emit_cut_pairs,
    rank_order,
    sweep_parallel,
    sweep_sequential,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "DiffusionParams",
    "DiffusionResult",
    "EdgeListParseError",
    "EmptySweepInput",
    "Frontier",
    "Graph",
    "GraphFormatError",
    "NcpProfile",
    "NcpRecord",
    "ParamError",
    "SparseVec",
    "SweepProfile",
    "WorkBoundExceeded",
    "boundary",
    "bucket_of",
    "build_graph",
    "compute_psi",
    "conductance",
    "edge_map",
    "emit_cut_pairs",
    "frontier_filter",
    "hkpr",
    "nibble",
    "parse_edge_list",
    "pr_nibble",
    "rand_hkpr",
    "rank_order",
    "read_binary",
    "run_diffusion",
    "run_ncp",
    "sample_walk_length",
    "sweep_parallel",
    "sweep_sequential",
    "vertex_map",
    "volume",
    "write_binary",
]
