// Browser entry point: binds the controller to the DOM. All numbers shown
// anywhere come from API payloads; this file only moves them around.

import { fetchMention, fetchStats } from "./api";
import { ExplorerController, type ExplorerSnapshot } from "./controller";
import { LatestWins } from "./fetcher";
import {
  defaultDomain,
  pixelToData,
  panDomain,
  pointSummary,
  renderScatter,
  zoomDomain,
  type ViewDomain,
} from "./scatter";
import type { ExplorerParams } from "./state";
import type { PennantPointDto } from "./types";

const PLOT = { width: 860, height: 560, margin: 52 };

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const seedInput = el<HTMLInputElement>("seed-input");
const openButton = el<HTMLButtonElement>("open-button");
const modeSelect = el<HTMLSelectElement>("mode-select");
const kInput = el<HTMLInputElement>("k-input");
const minTfInput = el<HTMLInputElement>("min-tf-input");
const logBaseInput = el<HTMLInputElement>("log-base-input");
const idfSelect = el<HTMLSelectElement>("idf-select");
const sectorsInput = el<HTMLInputElement>("sectors-input");
const applyButton = el<HTMLButtonElement>("apply-params");
const paramsMessage = el<HTMLSpanElement>("params-message");
const labelSelect = el<HTMLSelectElement>("label-select");
const resetViewButton = el<HTMLButtonElement>("reset-view");
const banner = el<HTMLDivElement>("banner");
const bannerText = el<HTMLSpanElement>("banner-text");
const retryButton = el<HTMLButtonElement>("retry-button");
const breadcrumbs = el<HTMLElement>("breadcrumbs");
const plotHost = el<HTMLDivElement>("plot");
const detailPane = el<HTMLDivElement>("detail");
const statsLine = el<HTMLElement>("stats-line");
const landing = el<HTMLDivElement>("landing");

let snapshot: ExplorerSnapshot | null = null;
let domain: ViewDomain | null = null;
let domainSeed: string | null = null;
const detailGate = new LatestWins();

function labelCount(): number {
  const value = labelSelect.value;
  if (value === "none") return 0;
  if (value === "all") return Number.MAX_SAFE_INTEGER;
  return 25;
}

function drawPlot(): void {
  if (!snapshot || !snapshot.diagram) {
    plotHost.innerHTML = "";
    return;
  }
  const diagram = snapshot.diagram;
  if (domain === null || domainSeed !== diagram.seed) {
    domain = defaultDomain(diagram);
    domainSeed = diagram.seed;
  }
  plotHost.innerHTML = renderScatter(diagram, domain, { ...PLOT, labelCount: labelCount() });
}

function syncParamsForm(params: ExplorerParams): void {
  modeSelect.value = params.mode;
  kInput.value = String(params.k);
  minTfInput.value = String(params.minTf);
  logBaseInput.value = String(params.logBase);
  idfSelect.value = params.idfStyle;
  sectorsInput.value = params.sectors ? `${params.sectors[0]},${params.sectors[1]}` : "";
}

function render(next: ExplorerSnapshot): void {
  snapshot = next;
  landing.hidden = next.phase !== "idle";
  plotHost.classList.toggle("loading", next.phase === "loading");

  if (next.phase === "error" && next.error) {
    bannerText.textContent = next.error;
    banner.hidden = false;
  } else {
    banner.hidden = true;
  }

  breadcrumbs.innerHTML = "";
  next.trail.forEach((seed, index) => {
    const button = document.createElement("button");
    button.type = "button";
    button.className = "crumb";
    button.textContent = seed;
    if (index === next.trail.length - 1) {
      button.disabled = true;
      button.classList.add("current");
    } else {
      button.addEventListener("click", () => controller.goBack(index));
    }
    breadcrumbs.appendChild(button);
  });

  syncParamsForm(next.params);
  if (next.seed !== null) {
    seedInput.value = next.pendingSeed ?? next.seed;
  }
  drawPlot();
}

const controller = new ExplorerController({
  fetchFn: (url) => fetch(url),
  onChange: render,
  writeUrl: (hash) => {
    if (window.location.hash !== hash) {
      window.location.hash = hash;
    }
  },
});

function showDetail(point: PennantPointDto): void {
  const mode = snapshot?.diagram?.mode ?? "citation";
  detailPane.innerHTML = "";
  const head = document.createElement("div");
  head.className = "detail-head";
  head.textContent = pointSummary(point);
  detailPane.appendChild(head);

  const docsList = document.createElement("ul");
  docsList.className = "citing-docs";
  detailPane.appendChild(docsList);
  void detailGate.run(
    () => fetchMention((url) => fetch(url), point.id, mode),
    (mention) => {
      docsList.innerHTML = "";
      for (const doc of mention.sample_citing_docs) {
        const item = document.createElement("li");
        const bits = [doc.doc_id, doc.title ?? "", doc.year === null ? "" : `(${doc.year})`];
        item.textContent = bits.filter(Boolean).join(" ");
        docsList.appendChild(item);
      }
    },
    () => {
      docsList.innerHTML = "<li>citing documents unavailable</li>";
    },
  );
}

// Plot interactions: click to reseed, hover for details, wheel zoom, drag pan.
plotHost.addEventListener("click", (event) => {
  const target = event.target as Element | null;
  const marker = target?.closest("circle.pt");
  const id = marker?.getAttribute("data-id");
  if (id) controller.reseed(id);
});

plotHost.addEventListener("mouseover", (event) => {
  const target = event.target as Element | null;
  const marker = target?.closest("circle.pt");
  const index = marker?.getAttribute("data-index");
  if (index !== null && index !== undefined && snapshot?.diagram) {
    const point = snapshot.diagram.points[Number(index)];
    if (point) showDetail(point);
  }
});

plotHost.addEventListener(
  "wheel",
  (event) => {
    if (!domain) return;
    event.preventDefault();
    const rect = plotHost.getBoundingClientRect();
    const center = pixelToData(domain, event.clientX - rect.left, event.clientY - rect.top, PLOT);
    domain = zoomDomain(domain, event.deltaY > 0 ? 1.2 : 1 / 1.2, center.x, center.y);
    drawPlot();
  },
  { passive: false },
);

let dragFrom: { px: number; py: number } | null = null;
plotHost.addEventListener("pointerdown", (event) => {
  dragFrom = { px: event.clientX, py: event.clientY };
});
window.addEventListener("pointermove", (event) => {
  if (!dragFrom || !domain) return;
  const perPixelX = (domain.x1 - domain.x0) / (PLOT.width - 2 * PLOT.margin);
  const perPixelY = (domain.y1 - domain.y0) / (PLOT.height - 2 * PLOT.margin);
  const dx = -(event.clientX - dragFrom.px) * perPixelX;
  const dy = (event.clientY - dragFrom.py) * perPixelY;
  if (dx !== 0 || dy !== 0) {
    domain = panDomain(domain, dx, dy);
    dragFrom = { px: event.clientX, py: event.clientY };
    drawPlot();
  }
});
window.addEventListener("pointerup", () => {
  dragFrom = null;
});

resetViewButton.addEventListener("click", () => {
  domain = null;
  drawPlot();
});
labelSelect.addEventListener("change", drawPlot);

openButton.addEventListener("click", () => {
  const seed = seedInput.value.trim();
  if (seed) controller.open(seed);
});
seedInput.addEventListener("keydown", (event) => {
  if (event.key === "Enter") {
    const seed = seedInput.value.trim();
    if (seed) controller.open(seed);
  }
});

applyButton.addEventListener("click", () => {
  const sectorsRaw = sectorsInput.value.trim();
  let sectors: [number, number] | null = null;
  if (sectorsRaw) {
    const pieces = sectorsRaw.split(",").map(Number);
    if (pieces.length !== 2 || pieces.some((v) => !Number.isFinite(v))) {
      paramsMessage.textContent = "sector bounds must be two numbers: b1,b2";
      return;
    }
    sectors = [pieces[0]!, pieces[1]!];
  }
  const problem = controller.setParams({
    mode: modeSelect.value as ExplorerParams["mode"],
    k: Number(kInput.value),
    minTf: Number(minTfInput.value),
    logBase: Number(logBaseInput.value),
    idfStyle: idfSelect.value as ExplorerParams["idfStyle"],
    sectors,
  });
  paramsMessage.textContent = problem ?? "";
});

retryButton.addEventListener("click", () => controller.retry());

window.addEventListener("hashchange", () => controller.syncFromUrl(window.location.hash));

void (async () => {
  try {
    const stats = await fetchStats((url) => fetch(url));
    const parts = stats.modes.map((mode) => {
      const s = stats[mode];
      return s ? `${mode}: ${s.n_docs} docs / ${s.n_keys} keys` : mode;
    });
    statsLine.textContent = `index v${stats.index_version} — ${parts.join(" · ")}`;
  } catch {
    statsLine.textContent = "service stats unavailable";
  }
})();

controller.init(window.location.hash || null);
