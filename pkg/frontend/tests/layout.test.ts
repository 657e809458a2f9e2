import { describe, expect, it } from "vitest";

import {
  bouquet,
  circle,
  doubleRing,
  forceDirected,
  lattice,
  layeredCliques,
  layoutGraph,
  petersen,
  radial,
} from "../src/layout";
import type { GraphView } from "../src/types";

function inUnitSquare(pts: { x: number; y: number }[]) {
  for (const p of pts) {
    expect(p.x).toBeGreaterThanOrEqual(0);
    expect(p.x).toBeLessThanOrEqual(1);
    expect(p.y).toBeGreaterThanOrEqual(0);
    expect(p.y).toBeLessThanOrEqual(1);
  }
}

function allDistinct(pts: { x: number; y: number }[]) {
  const seen = new Set(pts.map((p) => `${p.x.toFixed(5)},${p.y.toFixed(5)}`));
  expect(seen.size).toBe(pts.length);
}

describe("layout registry", () => {
  it("petersen uses two concentric rings of five", () => {
    const pts = petersen();
    expect(pts).toHaveLength(10);
    const r = (p: { x: number; y: number }) => Math.hypot(p.x - 0.5, p.y - 0.5);
    for (let i = 0; i < 5; i++) expect(r(pts[i])).toBeCloseTo(0.42, 5);
    for (let i = 5; i < 10; i++) expect(r(pts[i])).toBeCloseTo(0.2, 5);
  });

  it("lattice positions follow row-major vertex indexing", () => {
    const pts = lattice(3, 4);
    expect(pts).toHaveLength(12);
    // vertex 0 is (u_1, v_1), vertex 4 starts the second row
    expect(pts[0].y).toBeCloseTo(0.1);
    expect(pts[4].y).toBeGreaterThan(pts[0].y);
    expect(pts[1].x).toBeGreaterThan(pts[0].x);
    allDistinct(pts);
  });

  it("circle and radial layouts stay inside the board", () => {
    inUnitSquare(circle(7));
    inUnitSquare(radial(5));
    inUnitSquare(doubleRing(4));
    inUnitSquare(layeredCliques(3));
  });

  it("bouquet keeps the cut vertex centered and petals distinct", () => {
    const pts = bouquet([4, 4, 4, 4]);
    expect(pts).toHaveLength(13);
    expect(pts[0]).toEqual({ x: 0.5, y: 0.5 });
    inUnitSquare(pts);
    allDistinct(pts);
  });

  it("layered cliques layout puts the anchor clique in its own column", () => {
    const pts = layeredCliques(3);
    expect(pts).toHaveLength(17);
    for (let i = 0; i < 3; i++) expect(pts[i].x).toBeCloseTo(0.12);
    for (let i = 3; i < 10; i++) expect(pts[i].x).toBeCloseTo(0.55);
    for (let i = 10; i < 17; i++) expect(pts[i].x).toBeCloseTo(0.88);
  });

  it("force layout is deterministic and separates a path's endpoints", () => {
    const graph: GraphView = { n: 4, edges: [[0, 1], [1, 2], [2, 3]] };
    const a = forceDirected(graph);
    const b = forceDirected(graph);
    expect(a).toEqual(b);
    inUnitSquare(a);
    const d03 = Math.hypot(a[0].x - a[3].x, a[0].y - a[3].y);
    const d01 = Math.hypot(a[0].x - a[1].x, a[0].y - a[1].y);
    expect(d03).toBeGreaterThan(d01);
  });

  it("dispatches on family kind and falls back to force layout", () => {
    const grid: GraphView = { n: 6, edges: [] };
    expect(layoutGraph(grid, { kind: "grid", params: [2, 3] })).toHaveLength(6);
    const unknown: GraphView = { n: 5, edges: [[0, 1], [1, 2], [2, 3], [3, 4]] };
    expect(layoutGraph(unknown, null)).toHaveLength(5);
  });
});
