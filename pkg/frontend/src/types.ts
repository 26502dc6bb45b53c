// Wire types mirroring the /api responses. The explorer never recomputes
// any of these values; it renders them verbatim.

export type Mode = "citation" | "descriptor";
export type IdfStyle = "n_over_df" | "inverse_df";
export type Sector = "A" | "B" | "C";

export interface PennantPointDto {
  id: string;
  tf: number;
  df: number;
  ce: number;
  ease: number;
  sector: Sector;
  title?: string;
}

export interface PennantConfigDto {
  mode: Mode;
  k: number;
  min_tf: number;
  log_base: number;
  idf_style: IdfStyle;
  sector_policy: string;
  sector_bounds: [number, number] | null;
}

export interface PennantDiagramDto {
  seed: string;
  mode: Mode;
  n_docs: number;
  config: PennantConfigDto;
  sector_bounds: [number, number];
  points: PennantPointDto[];
}

export interface ModeStatsDto {
  n_docs: number;
  n_keys: number;
}

export interface StatsDto {
  modes: Mode[];
  index_version: number;
  citation?: ModeStatsDto;
  descriptor?: ModeStatsDto;
}

export interface CitingDocDto {
  doc_id: string;
  title: string | null;
  year: number | null;
}

export interface MentionDto {
  id: string;
  df: number;
  sample_citing_docs: CitingDocDto[];
}
