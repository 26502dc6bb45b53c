// Explorer state machine, kept free of DOM concerns so the navigation
// loop (seed -> fetch -> render -> click -> reseed) is testable headless.
// The view layer subscribes via onChange and draws whatever snapshot it
// gets; the URL sink receives the canonical hash after every commit.

import { ApiError, fetchPennant, type FetchLike } from "./api";
import { LatestWins } from "./fetcher";
import {
  DEFAULT_PARAMS,
  decodeHash,
  encodeHash,
  validateParams,
  type ExplorerParams,
} from "./state";
import type { PennantDiagramDto } from "./types";

export type Phase = "idle" | "loading" | "ready" | "error";

export interface ExplorerSnapshot {
  phase: Phase;
  /** Seed of the currently displayed diagram (trail's last entry). */
  seed: string | null;
  /** Seed being fetched right now, if any. */
  pendingSeed: string | null;
  params: ExplorerParams;
  diagram: PennantDiagramDto | null;
  /** Breadcrumb of successfully visited seeds; append-only except goBack. */
  trail: string[];
  /** Banner text; a failed reseed keeps the previous diagram visible. */
  error: string | null;
}

export interface ControllerOptions {
  fetchFn: FetchLike;
  onChange: (snapshot: ExplorerSnapshot) => void;
  writeUrl?: (hash: string) => void;
}

export class ExplorerController {
  private readonly fetchFn: FetchLike;
  private readonly onChange: (snapshot: ExplorerSnapshot) => void;
  private readonly writeUrl: (hash: string) => void;
  private readonly gate = new LatestWins();

  private phase: Phase = "idle";
  private seed: string | null = null;
  private pendingSeed: string | null = null;
  private params: ExplorerParams = { ...DEFAULT_PARAMS };
  private diagram: PennantDiagramDto | null = null;
  private trail: string[] = [];
  private error: string | null = null;
  private lastRequest: { seed: string; params: ExplorerParams } | null = null;

  constructor(options: ControllerOptions) {
    this.fetchFn = options.fetchFn;
    this.onChange = options.onChange;
    this.writeUrl = options.writeUrl ?? (() => undefined);
  }

  snapshot(): ExplorerSnapshot {
    return {
      phase: this.phase,
      seed: this.seed,
      pendingSeed: this.pendingSeed,
      params: { ...this.params },
      diagram: this.diagram,
      trail: [...this.trail],
      error: this.error,
    };
  }

  /** Start from a location hash; an unparseable hash lands on the idle screen. */
  init(hash: string | null): void {
    const decoded = hash ? decodeHash(hash) : null;
    if (decoded === null) {
      this.emit();
      return;
    }
    this.params = decoded.params;
    this.request(decoded.seed, "append");
  }

  /** Navigate to a seed typed by the user (fresh trail entry). */
  open(seed: string): void {
    this.request(seed, "append");
  }

  /** Navigate by clicking a point in the current diagram. */
  reseed(candidateId: string): void {
    this.request(candidateId, "append");
  }

  /** Breadcrumb navigation: truncate the trail back to the given entry. */
  goBack(index: number): void {
    if (index < 0 || index >= this.trail.length) return;
    this.request(this.trail[index]!, index);
  }

  /**
   * Apply a parameter change. Returns a validation message (and sends no
   * request) when the new values are out of range; otherwise refetches the
   * current seed under the new parameters.
   */
  setParams(patch: Partial<ExplorerParams>): string | null {
    const next = { ...this.params, ...patch };
    const problem = validateParams(next);
    if (problem !== null) {
      return problem;
    }
    this.params = next;
    const current = this.pendingSeed ?? this.seed;
    if (current !== null) {
      this.request(current, "replace");
    } else {
      this.emit();
    }
    return null;
  }

  /** Re-issue the last failed request. */
  retry(): void {
    if (this.lastRequest) {
      this.params = this.lastRequest.params;
      this.request(this.lastRequest.seed, "append");
    }
  }

  /**
   * React to an external hash change (browser back/forward or a pasted
   * URL). Stepping to the previous trail entry pops instead of appending.
   */
  syncFromUrl(hash: string): void {
    const decoded = decodeHash(hash);
    if (decoded === null) return;
    const current = this.seed !== null ? encodeHash(this.seed, this.params) : null;
    if (current === hash) return;
    this.params = decoded.params;
    const backIndex = this.trail.length - 2;
    if (backIndex >= 0 && this.trail[backIndex] === decoded.seed) {
      this.request(decoded.seed, backIndex);
    } else {
      this.request(decoded.seed, "append");
    }
  }

  private request(seed: string, trailAction: "append" | "replace" | number): void {
    this.pendingSeed = seed;
    this.phase = "loading";
    this.error = null;
    this.lastRequest = { seed, params: { ...this.params } };
    this.emit();

    const params = { ...this.params };
    void this.gate.run(
      () => fetchPennant(this.fetchFn, seed, params),
      (diagram) => this.commit(seed, params, diagram, trailAction),
      (error) => this.fail(error),
    );
  }

  private commit(
    seed: string,
    params: ExplorerParams,
    diagram: PennantDiagramDto,
    trailAction: "append" | "replace" | number,
  ): void {
    this.diagram = diagram;
    this.seed = seed;
    this.pendingSeed = null;
    this.params = params;
    this.phase = "ready";
    this.error = null;
    if (trailAction === "append") {
      if (this.trail[this.trail.length - 1] !== seed) {
        this.trail.push(seed);
      }
    } else if (trailAction === "replace") {
      if (this.trail.length === 0) {
        this.trail.push(seed);
      } else {
        this.trail[this.trail.length - 1] = seed;
      }
    } else {
      this.trail = this.trail.slice(0, trailAction + 1);
    }
    this.writeUrl(encodeHash(seed, params));
    this.emit();
  }

  private fail(error: unknown): void {
    // Non-destructive: the previous diagram (if any) stays on screen.
    this.pendingSeed = null;
    this.phase = "error";
    this.error =
      error instanceof ApiError
        ? error.message
        : error instanceof Error
          ? error.message
          : "unexpected error";
    this.emit();
  }

  private emit(): void {
    this.onChange(this.snapshot());
  }
}
