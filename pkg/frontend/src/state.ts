// URL-hash state codec. The full explorer state lives in the hash
// (`#/seed/<id>?mode=&k=&min_tf=&log_base=&idf_style=&sectors=`), so any
// view is shareable and reproducible from the URL alone.

import type { IdfStyle, Mode } from "./types";

export interface ExplorerParams {
  mode: Mode;
  k: number;
  minTf: number;
  logBase: number;
  idfStyle: IdfStyle;
  /** Absolute sector bounds [b1, b2]; null selects the tercile default. */
  sectors: [number, number] | null;
}

export const DEFAULT_PARAMS: ExplorerParams = {
  mode: "citation",
  k: 100,
  minTf: 1,
  logBase: 2,
  idfStyle: "n_over_df",
  sectors: null,
};

// Mirrors the service's request limits so invalid values never leave the client.
export const MAX_K = 1000;

export function validateParams(params: ExplorerParams): string | null {
  if (!Number.isInteger(params.k) || params.k < 1 || params.k > MAX_K) {
    return `k must be an integer between 1 and ${MAX_K}`;
  }
  if (!Number.isInteger(params.minTf) || params.minTf < 1) {
    return "min tf must be an integer >= 1";
  }
  if (!Number.isFinite(params.logBase) || params.logBase <= 1) {
    return "log base must be a number > 1";
  }
  if (params.sectors !== null) {
    const [b1, b2] = params.sectors;
    if (!Number.isFinite(b1) || !Number.isFinite(b2) || b1 < 0 || b1 >= b2) {
      return "sector bounds must satisfy 0 <= b1 < b2";
    }
  }
  return null;
}

export function encodeHash(seed: string, params: ExplorerParams): string {
  const query = new URLSearchParams();
  query.set("mode", params.mode);
  query.set("k", String(params.k));
  query.set("min_tf", String(params.minTf));
  query.set("log_base", String(params.logBase));
  query.set("idf_style", params.idfStyle);
  if (params.sectors !== null) {
    query.set("sectors", `${params.sectors[0]},${params.sectors[1]}`);
  }
  return `#/seed/${encodeURIComponent(seed)}?${query.toString()}`;
}

export function decodeHash(hash: string): { seed: string; params: ExplorerParams } | null {
  const match = /^#\/seed\/([^?]+)(?:\?(.*))?$/.exec(hash);
  if (!match || !match[1]) {
    return null;
  }
  const seed = decodeURIComponent(match[1]);
  const query = new URLSearchParams(match[2] ?? "");

  const params: ExplorerParams = { ...DEFAULT_PARAMS };
  const mode = query.get("mode");
  if (mode === "citation" || mode === "descriptor") {
    params.mode = mode;
  } else if (mode !== null) {
    return null;
  }
  const style = query.get("idf_style");
  if (style === "n_over_df" || style === "inverse_df") {
    params.idfStyle = style;
  } else if (style !== null) {
    return null;
  }

  const numeric = (name: string, fallback: number): number | null => {
    const raw = query.get(name);
    if (raw === null) return fallback;
    const value = Number(raw);
    return Number.isFinite(value) ? value : null;
  };
  const k = numeric("k", params.k);
  const minTf = numeric("min_tf", params.minTf);
  const logBase = numeric("log_base", params.logBase);
  if (k === null || minTf === null || logBase === null) {
    return null;
  }
  params.k = k;
  params.minTf = minTf;
  params.logBase = logBase;

  const sectors = query.get("sectors");
  if (sectors !== null) {
    const pieces = sectors.split(",").map(Number);
    if (pieces.length !== 2 || pieces.some((v) => !Number.isFinite(v))) {
      return null;
    }
    params.sectors = [pieces[0]!, pieces[1]!];
  }

  if (validateParams(params) !== null) {
    return null;
  }
  return { seed, params };
}

/** Query string for /api/pennant carrying the full parameter set. */
export function toQuery(seed: string, params: ExplorerParams): string {
  const query = new URLSearchParams();
  query.set("seed", seed);
  query.set("mode", params.mode);
  query.set("k", String(params.k));
  query.set("min_tf", String(params.minTf));
  query.set("log_base", String(params.logBase));
  query.set("idf_style", params.idfStyle);
  if (params.sectors !== null) {
    query.set("sectors", `${params.sectors[0]},${params.sectors[1]}`);
  }
  return query.toString();
}
