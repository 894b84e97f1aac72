/** Explorer state and its mapping to service requests.
 *
 * The UI never computes mathematics itself: this module only validates form
 * input and shapes request bodies; every plotted number comes back from the
 * service.
 */

import { DEFAULT_PRESET } from "./presets";
import { CloudRequest, ConcentrationRequest, MatrixJson } from "./types";

/** One real coordinate of a matrix entry, zero-based. */
export interface EntryCoord {
  row: number;
  col: number;
  part: "re" | "im";
}

export interface ProjectionSpec {
  x: EntryCoord;
  y: EntryCoord;
  z: EntryCoord;
  color: EntryCoord;
}

export interface ExplorerState {
  matrices: number[][][]; // N editable d x d real-entry grids
  n: number; // 1..10
  mode: "exhaustive" | "sample";
  count: number; // sample size when mode === "sample"
  seed: number;
  threshold: number | null; // null lets the service pick sqrt(ln n / n)
  projection: ProjectionSpec;
}

export const N_MIN = 1;
export const N_MAX = 10;
export const ALPHABET_SIZES = [2, 3];
export const DIMS = [2, 3];

/** The plotting convention used throughout: entries (1,1), (1,2), (2,1) as
 * axes and the (2,2) entry as the color. */
export function paperProjection(): ProjectionSpec {
  return {
    x: { row: 0, col: 0, part: "re" },
    y: { row: 0, col: 1, part: "re" },
    z: { row: 1, col: 0, part: "re" },
    color: { row: 1, col: 1, part: "re" },
  };
}

export function defaultState(): ExplorerState {
  return {
    matrices: DEFAULT_PRESET.matrices.map((m) => m.map((row) => [...row])),
    n: 8,
    mode: "exhaustive",
    count: 2000,
    seed: 0,
    threshold: null,
    projection: paperProjection(),
  };
}

function coordValid(coord: EntryCoord, dim: number): boolean {
  return (
    Number.isInteger(coord.row) &&
    Number.isInteger(coord.col) &&
    coord.row >= 0 &&
    coord.row < dim &&
    coord.col >= 0 &&
    coord.col < dim &&
    (coord.part === "re" || coord.part === "im")
  );
}

/** Human-readable problems with the state; empty when it can be submitted. */
export function validateState(state: ExplorerState): string[] {
  const problems: string[] = [];
  if (!ALPHABET_SIZES.includes(state.matrices.length)) {
    problems.push(`need ${ALPHABET_SIZES.join(" or ")} matrices`);
  }
  const dim = state.matrices[0]?.length ?? 0;
  if (!DIMS.includes(dim)) {
    problems.push(`matrix size must be ${DIMS.join(" or ")}`);
  }
  state.matrices.forEach((matrix, index) => {
    if (matrix.length !== dim || matrix.some((row) => row.length !== dim)) {
      problems.push(`matrix ${index + 1} is not ${dim}x${dim}`);
      return;
    }
    if (matrix.some((row) => row.some((v) => !Number.isFinite(v)))) {
      problems.push(`matrix ${index + 1} has a non-numeric entry`);
    }
  });
  if (!Number.isInteger(state.n) || state.n < N_MIN || state.n > N_MAX) {
    problems.push(`n must be an integer in ${N_MIN}..${N_MAX}`);
  }
  if (state.mode === "sample" && (!Number.isInteger(state.count) || state.count < 1)) {
    problems.push("sample count must be a positive integer");
  }
  if (!Number.isInteger(state.seed)) {
    problems.push("seed must be an integer");
  }
  if (state.threshold !== null && !(Number.isFinite(state.threshold) && state.threshold >= 0)) {
    problems.push("threshold must be a non-negative number");
  }
  for (const key of ["x", "y", "z", "color"] as const) {
    if (!coordValid(state.projection[key], dim)) {
      problems.push(`projection ${key} is outside the ${dim}x${dim} grid`);
    }
  }
  return problems;
}

export function toMatrixJson(grid: number[][]): MatrixJson {
  return { d: grid.length, re: grid.map((row) => [...row]) };
}

export function cloudRequest(state: ExplorerState): CloudRequest {
  const request: CloudRequest = {
    matrices: state.matrices.map(toMatrixJson),
    n: state.n,
    mode: state.mode,
    seed: state.seed,
  };
  if (state.mode === "sample") {
    request.count = state.count;
  }
  return request;
}

export function concentrationRequest(state: ExplorerState): ConcentrationRequest {
  const request: ConcentrationRequest = { ...cloudRequest(state) };
  if (state.threshold !== null) {
    request.threshold = state.threshold;
  }
  return request;
}

/** Stable key: two states with equal keys need no re-query. */
export function requestKey(request: CloudRequest | ConcentrationRequest): string {
  return JSON.stringify(request);
}
