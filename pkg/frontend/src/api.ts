// Thin typed client over the read-only HTTP API.

import type { ExplorerParams } from "./state";
import { toQuery } from "./state";
import type { MentionDto, PennantDiagramDto, StatsDto } from "./types";

export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

export type FetchLike = (url: string) => Promise<Response>;

async function getJson<T>(fetchFn: FetchLike, url: string): Promise<T> {
  let response: Response;
  try {
    response = await fetchFn(url);
  } catch {
    throw new ApiError(0, "network error: could not reach the service");
  }
  if (!response.ok) {
    let message = `request failed (${response.status})`;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) message = body.error;
    } catch {
      // non-JSON error body; keep the status message
    }
    throw new ApiError(response.status, message);
  }
  return (await response.json()) as T;
}

export function pennantUrl(seed: string, params: ExplorerParams): string {
  return `/api/pennant?${toQuery(seed, params)}`;
}

export function fetchPennant(
  fetchFn: FetchLike,
  seed: string,
  params: ExplorerParams,
): Promise<PennantDiagramDto> {
  return getJson<PennantDiagramDto>(fetchFn, pennantUrl(seed, params));
}

export function fetchStats(fetchFn: FetchLike): Promise<StatsDto> {
  return getJson<StatsDto>(fetchFn, "/api/stats");
}

export function fetchMention(
  fetchFn: FetchLike,
  id: string,
  mode: string,
): Promise<MentionDto> {
  return getJson<MentionDto>(fetchFn, `/api/mention/${encodeURIComponent(id)}?mode=${mode}`);
}
