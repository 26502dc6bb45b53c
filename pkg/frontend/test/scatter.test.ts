import { describe, expect, it } from "vitest";

import {
  defaultDomain,
  panDomain,
  pixelToData,
  pointSummary,
  renderScatter,
  zoomDomain,
} from "../src/scatter";
import { EMPTY_DIAGRAM, SEED_S_DIAGRAM } from "./fixtures";

const OPTS = { width: 860, height: 560, margin: 52 };

function markerAttrs(svg: string): Array<{ id: string; cx: number; cy: number }> {
  return [...svg.matchAll(/<circle class="pt" data-id="([^"]*)" data-index="\d+" cx="([\d.-]+)" cy="([\d.-]+)"/g)].map(
    (m) => ({ id: m[1]!, cx: Number(m[2]), cy: Number(m[3]) }),
  );
}

describe("defaultDomain", () => {
  it("reconstructs the achievable range from the payload bounds", () => {
    const domain = defaultDomain(SEED_S_DIAGRAM);
    // Tercile bounds imply band width b2-b1; one extra band each side spans [0, 3*width].
    expect(domain.y0).toBeLessThanOrEqual(0);
    expect(domain.y1).toBeGreaterThanOrEqual(2.58);
    expect(domain.x1).toBeGreaterThanOrEqual(2.58);
  });

  it("covers every point", () => {
    const domain = defaultDomain(SEED_S_DIAGRAM);
    for (const p of SEED_S_DIAGRAM.points) {
      expect(p.ce).toBeGreaterThanOrEqual(domain.x0);
      expect(p.ce).toBeLessThanOrEqual(domain.x1);
      expect(p.ease).toBeGreaterThanOrEqual(domain.y0);
      expect(p.ease).toBeLessThanOrEqual(domain.y1);
    }
  });
});

describe("renderScatter", () => {
  const domain = defaultDomain(SEED_S_DIAGRAM);

  it("draws one marker per point in payload order", () => {
    const svg = renderScatter(SEED_S_DIAGRAM, domain, OPTS);
    expect(markerAttrs(svg).map((m) => m.id)).toEqual(["A", "B", "C"]);
  });

  it("draws the three sector bands", () => {
    const svg = renderScatter(SEED_S_DIAGRAM, domain, OPTS);
    for (const sector of ["A", "B", "C"]) {
      expect(svg).toContain(`class="band band-${sector}"`);
    }
  });

  it("band edges sit exactly at the published sector bounds", () => {
    const svg = renderScatter(SEED_S_DIAGRAM, domain, OPTS);
    const bands = [...svg.matchAll(/<rect class="band band-(\w)" x="[\d.]+" y="([\d.]+)" width="[\d.]+" height="([\d.]+)"/g)];
    const byName = Object.fromEntries(bands.map((m) => [m[1], { y: Number(m[2]), h: Number(m[3]) }]));
    // A's bottom edge and B's top edge share the pixel of b2; B/C share b1.
    expect(byName["A"]!.y + byName["A"]!.h).toBeCloseTo(byName["B"]!.y, 1);
    expect(byName["B"]!.y + byName["B"]!.h).toBeCloseTo(byName["C"]!.y, 1);
  });

  it("markers keep payload order under zoom and stay inside the frame", () => {
    const zoomed = zoomDomain(domain, 0.6, 1.0, 1.0);
    const svg = renderScatter(SEED_S_DIAGRAM, zoomed, OPTS);
    for (const marker of markerAttrs(svg)) {
      expect(marker.cx).toBeGreaterThanOrEqual(OPTS.margin - 1);
      expect(marker.cx).toBeLessThanOrEqual(OPTS.width - OPTS.margin + 1);
      expect(marker.cy).toBeGreaterThanOrEqual(OPTS.margin - 1);
      expect(marker.cy).toBeLessThanOrEqual(OPTS.height - OPTS.margin + 1);
    }
  });

  it("culls markers that leave the zoomed view instead of drawing them outside", () => {
    const panned = panDomain(domain, 100, 100); // far away from the data
    const svg = renderScatter(SEED_S_DIAGRAM, panned, OPTS);
    expect(markerAttrs(svg)).toEqual([]);
  });

  it("label policy: top-n in rank order, or none", () => {
    const top1 = renderScatter(SEED_S_DIAGRAM, domain, { ...OPTS, labelCount: 1 });
    expect([...top1.matchAll(/class="pt-label"/g)]).toHaveLength(1);
    expect(top1).toContain(">A</text>");
    const none = renderScatter(SEED_S_DIAGRAM, domain, { ...OPTS, labelCount: 0 });
    expect([...none.matchAll(/class="pt-label"/g)]).toHaveLength(0);
  });

  it("empty diagram shows the no-co-mentions notice with axes still drawn", () => {
    const svg = renderScatter(EMPTY_DIAGRAM, defaultDomain(EMPTY_DIAGRAM), OPTS);
    expect(svg).toContain("no co-mentions for this seed");
    expect(svg).toContain('class="frame"');
    expect(markerAttrs(svg)).toEqual([]);
  });

  it("escapes hostile ids in markup", () => {
    const diagram = {
      ...SEED_S_DIAGRAM,
      points: [{ ...SEED_S_DIAGRAM.points[0]!, id: '<script>"&' }],
    };
    const svg = renderScatter(diagram, domain, OPTS);
    expect(svg).not.toContain("<script>");
    expect(svg).toContain("&lt;script&gt;");
  });

  it("tooltip summary carries the payload numbers verbatim", () => {
    const point = SEED_S_DIAGRAM.points[2]!;
    const summary = pointSummary(point);
    expect(summary).toContain("tf=1");
    expect(summary).toContain("df=2");
    expect(summary).toContain("ease=1.5849625007211563");
    expect(summary).toContain("sector=B");
  });
});

describe("domain transforms", () => {
  const domain = { x0: 0, x1: 4, y0: -1, y1: 3 };

  it("zoom keeps the anchor point fixed", () => {
    const zoomed = zoomDomain(domain, 0.5, 2, 1);
    expect(zoomed.x1 - zoomed.x0).toBeCloseTo(2);
    expect((2 - zoomed.x0) / (zoomed.x1 - zoomed.x0)).toBeCloseTo((2 - domain.x0) / 4);
  });

  it("pan shifts both axes by the given data offsets", () => {
    expect(panDomain(domain, 1, -2)).toEqual({ x0: 1, x1: 5, y0: -3, y1: 1 });
  });

  it("pixelToData inverts the plot transform at the corners", () => {
    const bottomLeft = pixelToData(domain, OPTS.margin, OPTS.height - OPTS.margin, OPTS);
    expect(bottomLeft.x).toBeCloseTo(domain.x0);
    expect(bottomLeft.y).toBeCloseTo(domain.y0);
    const topRight = pixelToData(domain, OPTS.width - OPTS.margin, OPTS.margin, OPTS);
    expect(topRight.x).toBeCloseTo(domain.x1);
    expect(topRight.y).toBeCloseTo(domain.y1);
  });
});
