import type { ClusterResponse } from "./types";

/**
 * Strings for the result panel. Every number is formatted straight from the
 * service response; the client never recomputes conductance or volume.
 */
export interface ResultPanel {
  size: string;
  volume: string;
  conductance: string;
  supportSize: string;
  pushCount: string;
  pushedVolume: string;
  iterations: string;
  diffusionMs: string;
  sweepMs: string;
  members: number[];
}

export function buildResultPanel(resp: ClusterResponse): ResultPanel {
  return {
    size: String(resp.cluster.length),
    volume: resp.cluster_volume === null ? "-" : String(resp.cluster_volume),
    conductance: resp.conductance === null ? "-" : String(resp.conductance),
    supportSize: String(resp.support_size),
    pushCount: String(resp.push_count),
    pushedVolume: String(resp.pushed_volume),
    iterations: String(resp.iterations),
    diffusionMs: resp.wall_time_ms.diffusion.toFixed(1),
    sweepMs: resp.wall_time_ms.sweep === null ? "-" : resp.wall_time_ms.sweep.toFixed(1),
    members: resp.cluster,
  };
}
