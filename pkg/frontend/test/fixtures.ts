// Frozen service payloads for the six-document fixture corpus, captured
// verbatim from /api/pennant (the backend's oracle-checked output).

import type { PennantDiagramDto } from "../src/types";

export const SEED_S_DIAGRAM: PennantDiagramDto = {
  seed: "S",
  mode: "citation",
  n_docs: 6,
  config: {
    mode: "citation",
    k: 100,
    min_tf: 1,
    log_base: 2.0,
    idf_style: "n_over_df",
    sector_policy: "terciles_of_range",
    sector_bounds: null,
  },
  sector_bounds: [0.861654166907052, 1.723308333814104],
  points: [
    { id: "A", tf: 2, df: 3, ce: 1.0, ease: 1.0, sector: "B" },
    { id: "B", tf: 2, df: 3, ce: 1.0, ease: 1.0, sector: "B" },
    { id: "C", tf: 1, df: 2, ce: 0.0, ease: 1.5849625007211563, sector: "B" },
  ],
};

export const SEED_A_DIAGRAM: PennantDiagramDto = {
  seed: "A",
  mode: "citation",
  n_docs: 6,
  config: {
    mode: "citation",
    k: 100,
    min_tf: 1,
    log_base: 2.0,
    idf_style: "n_over_df",
    sector_policy: "terciles_of_range",
    sector_bounds: null,
  },
  sector_bounds: [0.861654166907052, 1.723308333814104],
  points: [
    { id: "S", tf: 2, df: 4, ce: 1.0, ease: 0.5849625007211562, sector: "C" },
    { id: "B", tf: 1, df: 3, ce: 0.0, ease: 1.0, sector: "B" },
  ],
};

export const EMPTY_DIAGRAM: PennantDiagramDto = {
  seed: "lonely",
  mode: "citation",
  n_docs: 6,
  config: {
    mode: "citation",
    k: 100,
    min_tf: 1,
    log_base: 2.0,
    idf_style: "n_over_df",
    sector_policy: "terciles_of_range",
    sector_bounds: null,
  },
  sector_bounds: [0.861654166907052, 1.723308333814104],
  points: [],
};
