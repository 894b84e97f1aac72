/** Pure mapping from flattened matrices to plot coordinates and colors. */

import { EntryCoord, ProjectionSpec } from "./state";
import { FlatMatrix } from "./types";

export function entryValue(flat: FlatMatrix, coord: EntryCoord, dim: number): number {
  const index = coord.row * dim + coord.col;
  return (coord.part === "re" ? flat.re : flat.im)[index];
}

export function projectOne(
  flat: FlatMatrix,
  projection: ProjectionSpec,
  dim: number,
): [number, number, number] {
  return [
    entryValue(flat, projection.x, dim),
    entryValue(flat, projection.y, dim),
    entryValue(flat, projection.z, dim),
  ];
}

/** Positions as one flat xyz array, plus the raw color-coordinate values. */
export function projectPoints(
  points: FlatMatrix[],
  projection: ProjectionSpec,
  dim: number,
): { positions: Float32Array; colorValues: Float64Array } {
  const positions = new Float32Array(points.length * 3);
  const colorValues = new Float64Array(points.length);
  points.forEach((point, i) => {
    const [x, y, z] = projectOne(point, projection, dim);
    positions[3 * i] = x;
    positions[3 * i + 1] = y;
    positions[3 * i + 2] = z;
    colorValues[i] = entryValue(point, projection.color, dim);
  });
  return { positions, colorValues };
}

/** Cool-to-warm ramp on [0, 1]; degenerate ranges map to the midpoint. */
export function rampColor(t: number): [number, number, number] {
  const s = Math.min(1, Math.max(0, t));
  return [0.23 + 0.7 * s, 0.3 + 0.25 * Math.sin(Math.PI * s), 0.75 - 0.62 * s];
}

export function colorize(values: Float64Array): Float32Array {
  let low = Infinity;
  let high = -Infinity;
  for (const v of values) {
    if (v < low) low = v;
    if (v > high) high = v;
  }
  const span = high - low;
  const colors = new Float32Array(values.length * 3);
  values.forEach((v, i) => {
    const [r, g, b] = rampColor(span > 0 ? (v - low) / span : 0.5);
    colors[3 * i] = r;
    colors[3 * i + 1] = g;
    colors[3 * i + 2] = b;
  });
  return colors;
}

export function coordLabel(coord: EntryCoord): string {
  return `${coord.part === "re" ? "Re" : "Im"}(${coord.row + 1},${coord.col + 1})`;
}
