// Wire types shared with the HTTP service.

export interface FrameDoc {
  width: number;
  height: number;
}

export interface ObjectDoc {
  id: string;
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface LayoutDocument {
  schema_version: number;
  frame: FrameDoc;
  objects: ObjectDoc[];
}

export const MEASURE_NAMES = [
  "balance",
  "equilibrium",
  "symmetry",
  "sequence",
  "rhythm",
  "av",
] as const;

export type MeasureName = (typeof MEASURE_NAMES)[number];

export type MeasureVector = Record<MeasureName, number>;

export interface EvaluateResponse extends MeasureVector {
  object_count: number;
  schema_version: number;
}

export interface ObjectiveSpec {
  mode: "maximize" | "match_target";
  weights?: number[];
  target?: number | number[];
}

export interface SearchParams {
  seed: number;
  iterations: number;
  initial_temperature?: number;
  cooling?: number;
  move_scale?: number;
  forbid_overlap?: boolean;
}

export interface OptimizeRequest {
  layout: LayoutDocument;
  objective: ObjectiveSpec;
  params: SearchParams;
}

export interface OptimizeResponse {
  best_layout: LayoutDocument;
  best_score: number;
  trace: [number, number][];
  evaluations: number;
  rng: string;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  object_id?: string | null;
}

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
}
