// Pure SVG construction for the pennant scatter. Every displayed number
// comes straight from the API payload; the only arithmetic here is the
// affine data->pixel transform. Bands and markers share that transform, so
// zooming or panning the domain can never misalign them.

import type { PennantDiagramDto, PennantPointDto, Sector } from "./types";

export interface ViewDomain {
  x0: number;
  x1: number;
  y0: number;
  y1: number;
}

export interface ScatterOptions {
  width?: number;
  height?: number;
  margin?: number;
  /** How many top-ranked points get a text label (payload order = rank order). */
  labelCount?: number;
}

const SECTOR_FILLS: Record<Sector, string> = {
  A: "#dce8dc",
  B: "#e8e8e8",
  C: "#f3f3f3",
};

const SECTOR_MARKERS: Record<Sector, string> = {
  A: "#1f7a33",
  B: "#2b5d8c",
  C: "#77553d",
};

/**
 * Initial domain derived from the payload alone: the y range spans one band
 * width beyond each sector bound (for the tercile default that reconstructs
 * the full achievable ease range), widened if any point falls outside; the
 * x range is sized to the same span for the classic pennant aspect.
 */
export function defaultDomain(diagram: PennantDiagramDto): ViewDomain {
  const [b1, b2] = diagram.sector_bounds;
  const bandWidth = b2 - b1;
  const eases = diagram.points.map((p) => p.ease);
  const ces = diagram.points.map((p) => p.ce);
  const y0 = Math.min(b1 - bandWidth, 0, ...eases);
  const y1 = Math.max(b2 + bandWidth, ...eases);
  const x1 = Math.max(y1 - y0, ...ces);
  const pad = 0.04 * Math.max(x1, y1 - y0, 1e-9);
  return { x0: -pad, x1: x1 + pad, y0: y0 - pad, y1: y1 + pad };
}

export function zoomDomain(domain: ViewDomain, factor: number, cx: number, cy: number): ViewDomain {
  return {
    x0: cx + (domain.x0 - cx) * factor,
    x1: cx + (domain.x1 - cx) * factor,
    y0: cy + (domain.y0 - cy) * factor,
    y1: cy + (domain.y1 - cy) * factor,
  };
}

export function panDomain(domain: ViewDomain, dx: number, dy: number): ViewDomain {
  return { x0: domain.x0 + dx, x1: domain.x1 + dx, y0: domain.y0 + dy, y1: domain.y1 + dy };
}

/** Inverse of the plot transform, for pointer-driven zoom and pan. */
export function pixelToData(
  domain: ViewDomain,
  px: number,
  py: number,
  options: ScatterOptions = {},
): { x: number; y: number } {
  const width = options.width ?? 860;
  const height = options.height ?? 560;
  const margin = options.margin ?? 52;
  const plotW = width - 2 * margin;
  const plotH = height - 2 * margin;
  return {
    x: domain.x0 + ((px - margin) / plotW) * (domain.x1 - domain.x0),
    y: domain.y0 + ((height - margin - py) / plotH) * (domain.y1 - domain.y0),
  };
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fmt(value: number): string {
  return value.toFixed(2);
}

export function pointSummary(point: PennantPointDto): string {
  const title = point.title ? ` — ${point.title}` : "";
  return `${point.id}${title} · tf=${point.tf} df=${point.df} ce=${point.ce} ease=${point.ease} sector=${point.sector}`;
}

export function renderScatter(
  diagram: PennantDiagramDto,
  domain: ViewDomain,
  options: ScatterOptions = {},
): string {
  const width = options.width ?? 860;
  const height = options.height ?? 560;
  const margin = options.margin ?? 52;
  const labelCount = options.labelCount ?? 25;
  const plotW = width - 2 * margin;
  const plotH = height - 2 * margin;

  const sx = (x: number): number => margin + ((x - domain.x0) / (domain.x1 - domain.x0)) * plotW;
  const sy = (y: number): number =>
    height - margin - ((y - domain.y0) / (domain.y1 - domain.y0)) * plotH;

  const clampY = (y: number): number => Math.min(Math.max(y, domain.y0), domain.y1);
  const [b1, b2] = diagram.sector_bounds;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" class="pennant-plot" data-seed="${esc(diagram.seed)}">`,
  );

  // Sector bands: C below b1, B between, A above, clipped to the view.
  const bandEdges: Array<[Sector, number, number]> = [
    ["A", clampY(b2), domain.y1],
    ["B", clampY(b1), clampY(b2)],
    ["C", domain.y0, clampY(b1)],
  ];
  for (const [sector, low, high] of bandEdges) {
    if (high <= low) continue;
    const top = sy(high);
    parts.push(
      `<rect class="band band-${sector}" x="${fmt(margin)}" y="${fmt(top)}" ` +
        `width="${fmt(plotW)}" height="${fmt(sy(low) - top)}" fill="${SECTOR_FILLS[sector]}"/>`,
    );
    const labelY = (sy(low) + top) / 2;
    if (sy(low) - top > 18) {
      parts.push(
        `<text class="band-name" x="${fmt(margin + plotW - 8)}" y="${fmt(labelY + 4)}" ` +
          `text-anchor="end">${sector}</text>`,
      );
    }
  }

  // Frame and tick marks (4 per axis, value labels only).
  parts.push(
    `<rect class="frame" x="${fmt(margin)}" y="${fmt(margin)}" width="${fmt(plotW)}" ` +
      `height="${fmt(plotH)}" fill="none" stroke="#444"/>`,
  );
  for (let i = 0; i <= 4; i++) {
    const xVal = domain.x0 + (i / 4) * (domain.x1 - domain.x0);
    const yVal = domain.y0 + (i / 4) * (domain.y1 - domain.y0);
    parts.push(
      `<text class="tick" x="${fmt(sx(xVal))}" y="${fmt(height - margin + 16)}" ` +
        `text-anchor="middle">${fmt(xVal)}</text>`,
    );
    parts.push(
      `<text class="tick" x="${fmt(margin - 6)}" y="${fmt(sy(yVal) + 4)}" ` +
        `text-anchor="end">${fmt(yVal)}</text>`,
    );
  }
  parts.push(
    `<text class="axis-name" x="${fmt(margin + plotW / 2)}" y="${fmt(height - 10)}" ` +
      `text-anchor="middle">cognitive effect</text>`,
  );
  parts.push(
    `<text class="axis-name" x="14" y="${fmt(margin + plotH / 2)}" text-anchor="middle" ` +
      `transform="rotate(-90 14 ${fmt(margin + plotH / 2)})">ease of processing</text>`,
  );

  if (diagram.points.length === 0) {
    parts.push(
      `<text class="empty-notice" x="${fmt(margin + plotW / 2)}" y="${fmt(margin + plotH / 2)}" ` +
        `text-anchor="middle">no co-mentions for this seed</text>`,
    );
  }

  // Markers in payload order (= rank order); data-index links hover/click
  // handlers back to the payload without re-deriving anything.
  diagram.points.forEach((point, rank) => {
    const cx = sx(point.ce);
    const cy = sy(point.ease);
    if (cx < margin - 1 || cx > width - margin + 1 || cy < margin - 1 || cy > height - margin + 1) {
      return; // outside the zoomed view
    }
    parts.push(
      `<circle class="pt" data-id="${esc(point.id)}" data-index="${rank}" ` +
        `cx="${fmt(cx)}" cy="${fmt(cy)}" r="5" fill="${SECTOR_MARKERS[point.sector]}">` +
        `<title>${esc(pointSummary(point))}</title></circle>`,
    );
    if (rank < labelCount) {
      parts.push(
        `<text class="pt-label" x="${fmt(cx + 7)}" y="${fmt(cy - 7)}">${esc(point.id)}</text>`,
      );
    }
  });

  parts.push("</svg>");
  return parts.join("");
}
