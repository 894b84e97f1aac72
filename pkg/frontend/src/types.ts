/** Wire types for the compute service. All numbers originate server-side. */

export interface MatrixJson {
  d: number;
  re: number[][];
  im?: number[][];
}

/** Row-major flattened complex matrix, d*d entries per part. */
export interface FlatMatrix {
  re: number[];
  im: number[];
}

export interface CloudPoint extends FlatMatrix {
  word: string;
}

export type MarkerName =
  | "exp_of_sum"
  | "ordered_product"
  | "reversed_product"
  | "standard_word";

export interface PointCloudDoc {
  kind: "point_cloud";
  n: number;
  alphabet_size: number;
  dim: number;
  mode: string;
  count: number;
  count_requested: number | null;
  seed: number;
  markers: Record<MarkerName, FlatMatrix>;
  matrices: MatrixJson[];
  points: CloudPoint[];
}

export interface ConcentrationDoc {
  kind: "concentration_report";
  n: number;
  alphabet_size: number;
  dim: number;
  mode: string;
  count: number | null;
  seed: number;
  threshold: number;
  proportion_within: number;
  count_within: number;
  count_total: number;
  c_constant?: number;
  proportion_lower_bound?: number;
  distance_norm: string;
  constant_norm: string;
  distances: {
    min: number;
    max: number;
    mean: number;
    quantiles: Record<string, number>;
  };
  histogram: { edges: number[]; counts: number[] };
  matrices: MatrixJson[];
}

export interface ApiErrorBody {
  error: { code: string; detail?: string; estimated_count?: number };
}

export interface CloudRequest {
  matrices: MatrixJson[];
  n: number;
  mode: "exhaustive" | "sample";
  count?: number;
  seed?: number;
}

export interface ConcentrationRequest extends CloudRequest {
  threshold?: number;
}

export interface HealthDoc {
  status: string;
  version: string;
}
