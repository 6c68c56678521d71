// Client for the three service endpoints. Evaluate responses keep the raw
// number literals from the body so the UI can show exactly the bytes the
// service sent, not a re-formatted float.

import {
  ApiErrorBody,
  EvaluateResponse,
  LayoutDocument,
  MEASURE_NAMES,
  MeasureName,
  OptimizeRequest,
  OptimizeResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiRequestError extends Error {
  status: number;
  body: ApiErrorBody | null;

  constructor(status: number, body: ApiErrorBody | null) {
    super(body?.message ?? `request failed with status ${status}`);
    this.status = status;
    this.body = body;
  }
}

/** Pull the verbatim numeric literal for each key out of a JSON body. */
export function extractNumberLiterals(
  body: string,
  keys: readonly string[],
): Record<string, string> {
  const literals: Record<string, string> = {};
  for (const key of keys) {
    const match = body.match(
      new RegExp(`"${key}"\\s*:\\s*(-?(?:\\d+\\.?\\d*|\\.\\d+)(?:[eE][+-]?\\d+)?)`),
    );
    if (match) literals[key] = match[1];
  }
  return literals;
}

export interface EvaluateResult {
  values: EvaluateResponse;
  literals: Record<MeasureName, string>;
}

export class AmaClient {
  private baseUrl: string;
  private fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private async post(path: string, payload: unknown): Promise<Response> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!response.ok) {
      let body: ApiErrorBody | null = null;
      try {
        body = (await response.json()) as ApiErrorBody;
      } catch {
        body = null;
      }
      throw new ApiRequestError(response.status, body);
    }
    return response;
  }

  async evaluate(doc: LayoutDocument): Promise<EvaluateResult> {
    const response = await this.post("/api/evaluate", doc);
    const text = await response.text();
    const values = JSON.parse(text) as EvaluateResponse;
    const literals = extractNumberLiterals(text, MEASURE_NAMES) as Record<
      MeasureName,
      string
    >;
    return { values, literals };
  }

  async optimize(request: OptimizeRequest): Promise<OptimizeResponse> {
    const response = await this.post("/api/optimize", request);
    return (await response.json()) as OptimizeResponse;
  }

  async health(): Promise<{ status: string; version: string }> {
    const response = await this.fetchFn(`${this.baseUrl}/healthz`);
    if (!response.ok) throw new ApiRequestError(response.status, null);
    return (await response.json()) as { status: string; version: string };
  }
}
