import type { SweepPoint } from "./types";

export interface ChartPoint extends SweepPoint {
  x: number; // log-scaled horizontal position in [0, 1]
  y: number; // vertical position in [0, 1], 0 at the top
  isMinimum: boolean;
}

export interface ChartModel {
  points: ChartPoint[];
  minIndex: number; // index into points; the marker
  empty: boolean;
}

/**
 * Lay out the conductance-vs-prefix-size curve on a log-x axis and mark the
 * minimum. Ties take the smallest prefix, mirroring the service's sweep.
 */
export function buildChartModel(curve: [number, number][]): ChartModel {
  if (curve.length === 0) {
    return { points: [], minIndex: -1, empty: true };
  }
  let minIndex = 0;
  for (let i = 1; i < curve.length; i++) {
    if (curve[i][1] < curve[minIndex][1]) minIndex = i;
  }
  const maxLog = Math.max(Math.log(curve[curve.length - 1][0]), 1e-9);
  const maxPhi = Math.max(...curve.map(([, phi]) => phi), 1e-9);
  const points = curve.map(([size, conductance], i) => ({
    size,
    conductance,
    x: curve.length === 1 ? 0.5 : Math.log(size) / maxLog,
    y: 1 - conductance / maxPhi,
    isMinimum: i === minIndex,
  }));
  return { points, minIndex, empty: false };
}

export function hoverLabel(p: ChartPoint): string {
  return `size ${p.size}: φ = ${p.conductance}`;
}

/** SVG polyline coordinates for a width x height viewport. */
export function polylinePoints(model: ChartModel, width: number, height: number): string {
  return model.points
    .map((p) => `${(p.x * width).toFixed(1)},${(p.y * height).toFixed(1)}`)
    .join(" ");
}
