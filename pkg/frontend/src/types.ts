export interface ClusterRequest {
  algorithm: string;
  seed: number;
  epsilon?: number;
  alpha?: number;
  max_iters?: number;
  t?: number;
  taylor_degree?: number;
  num_walks?: number;
  max_walk_len?: number;
  rng_seed?: number;
  hkpr_threshold_uses_exp_t?: boolean;
  run_sweep?: boolean;
}

export interface SweepPoint {
  size: number;
  conductance: number;
}

export interface ClusterResponse {
  v: number;
  cluster: number[];
  conductance: number | null;
  cluster_volume: number | null;
  support_size: number;
  sweep_curve: [number, number][];
  push_count: number;
  pushed_volume: number;
  iterations: number;
  wall_time_ms: { diffusion: number; sweep: number | null };
}

export interface GraphStats {
  v: number;
  n: number;
  m: number;
  max_degree: number;
  degree_histogram: Record<string, number>;
}

export interface NeighborSample {
  v: number;
  vertex_id: number;
  degree: number;
  neighbors: number[];
}

export interface ServiceError {
  v: number;
  code: string;
  message: string;
  field: string | null;
}
