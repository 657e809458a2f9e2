import type { FamilySpec, GraphView } from "./types";

export interface Point {
  x: number;
  y: number;
}

/** Vertex positions in the unit square, family-aware: circles for cycles and
 * cliques, two rings for the Petersen graph, a lattice for grids and tori,
 * petals for bouquets, columns for the clique layers, and a deterministic
 * force-directed fallback for uploaded graphs. */
export function layoutGraph(graph: GraphView, family: FamilySpec | null): Point[] {
  const kind = family?.kind ?? "";
  switch (kind) {
    case "cycle":
    case "complete":
      return circle(graph.n);
    case "path":
      return line(graph.n);
    case "star":
      return radial(graph.n);
    case "petersen":
      return petersen();
    case "grid":
    case "torus":
      return lattice(family!.params[0], family!.params[1]);
    case "bouquet":
      return bouquet(family!.params);
    case "complete_multipartite":
      return columns(family!.params);
    case "lex_cycle_k2":
      return doubleRing(family!.params[0]);
    case "g_k":
      return layeredCliques(family!.params[0]);
    default:
      return forceDirected(graph);
  }
}

function ring(n: number, cx: number, cy: number, r: number, phase = -Math.PI / 2): Point[] {
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const a = phase + (2 * Math.PI * i) / n;
    pts.push({ x: cx + r * Math.cos(a), y: cy + r * Math.sin(a) });
  }
  return pts;
}

export function circle(n: number): Point[] {
  return ring(n, 0.5, 0.5, 0.4);
}

export function line(n: number): Point[] {
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    pts.push({ x: n === 1 ? 0.5 : 0.08 + (0.84 * i) / (n - 1), y: 0.5 });
  }
  return pts;
}

export function radial(n: number): Point[] {
  // center plus a leaf ring
  return [{ x: 0.5, y: 0.5 }, ...ring(n - 1, 0.5, 0.5, 0.38)];
}

export function petersen(): Point[] {
  return [...ring(5, 0.5, 0.5, 0.42), ...ring(5, 0.5, 0.5, 0.2)];
}

export function lattice(s: number, t: number): Point[] {
  const pts: Point[] = [];
  for (let i = 0; i < s; i++) {
    for (let j = 0; j < t; j++) {
      pts.push({
        x: t === 1 ? 0.5 : 0.1 + (0.8 * j) / (t - 1),
        y: s === 1 ? 0.5 : 0.1 + (0.8 * i) / (s - 1),
      });
    }
  }
  return pts;
}

export function bouquet(lengths: number[]): Point[] {
  const pts: Point[] = [{ x: 0.5, y: 0.5 }];
  const m = lengths.length;
  lengths.forEach((len, i) => {
    const dir = (2 * Math.PI * i) / m - Math.PI / 2;
    // the cycle's internal vertices fan out on an arc away from the cut vertex
    const span = Math.min(Math.PI * 0.7, 0.45 * Math.PI * (len / 4));
    for (let j = 1; j < len; j++) {
      const frac = j / len;
      const a = dir + span * (frac - 0.5) * 2;
      const r = 0.16 + 0.26 * Math.sin(Math.PI * frac);
      pts.push({ x: 0.5 + r * Math.cos(a), y: 0.5 + r * Math.sin(a) });
    }
  });
  return pts;
}

export function columns(parts: number[]): Point[] {
  const pts: Point[] = [];
  const k = parts.length;
  parts.forEach((size, i) => {
    const x = k === 1 ? 0.5 : 0.1 + (0.8 * i) / (k - 1);
    for (let j = 0; j < size; j++) {
      const y = size === 1 ? 0.5 : 0.15 + (0.7 * j) / (size - 1);
      pts.push({ x, y });
    }
  });
  return pts;
}

export function doubleRing(m: number): Point[] {
  const inner = ring(m, 0.5, 0.5, 0.22);
  const outer = ring(m, 0.5, 0.5, 0.42);
  const pts: Point[] = [];
  for (let i = 0; i < m; i++) {
    pts.push(inner[i], outer[i]);
  }
  return pts;
}

export function layeredCliques(k: number): Point[] {
  const p = (1 << k) - 1;
  const pts: Point[] = [];
  for (let j = 0; j < k; j++) {
    pts.push({ x: 0.12, y: 0.5 + (j - (k - 1) / 2) * (0.6 / Math.max(k - 1, 1)) });
  }
  for (const x of [0.55, 0.88]) {
    for (let i = 0; i < p; i++) {
      pts.push({ x, y: p === 1 ? 0.5 : 0.08 + (0.84 * i) / (p - 1) });
    }
  }
  return pts;
}

/** Deterministic spring embedding: start on a circle, run a fixed number of
 * attraction/repulsion rounds. No randomness, so renders are reproducible. */
export function forceDirected(graph: GraphView, rounds = 120): Point[] {
  const n = graph.n;
  if (n === 1) return [{ x: 0.5, y: 0.5 }];
  const pts = ring(n, 0.5, 0.5, 0.4);
  const adj: number[][] = Array.from({ length: n }, () => []);
  for (const [u, v] of graph.edges) {
    adj[u].push(v);
    adj[v].push(u);
  }
  const ideal = 0.8 / Math.sqrt(n);
  for (let round = 0; round < rounds; round++) {
    const step = 0.05 * (1 - round / rounds);
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let u = 0; u < n; u++) {
      for (let v = u + 1; v < n; v++) {
        let dx = pts[u].x - pts[v].x;
        let dy = pts[u].y - pts[v].y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          dx = 1e-3 * (u - v);
          dy = 1e-3;
          d2 = dx * dx + dy * dy;
        }
        const rep = (ideal * ideal) / d2;
        fx[u] += dx * rep;
        fy[u] += dy * rep;
        fx[v] -= dx * rep;
        fy[v] -= dy * rep;
      }
    }
    for (const [u, v] of graph.edges) {
      const dx = pts[u].x - pts[v].x;
      const dy = pts[u].y - pts[v].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-3;
      const att = (d - ideal) / d;
      fx[u] -= dx * att;
      fy[u] -= dy * att;
      fx[v] += dx * att;
      fy[v] += dy * att;
    }
    for (let u = 0; u < n; u++) {
      pts[u].x += Math.max(-step, Math.min(step, fx[u] * step));
      pts[u].y += Math.max(-step, Math.min(step, fy[u] * step));
    }
  }
  // normalize into the unit square with a margin
  const xs = pts.map((p) => p.x);
  const ys = pts.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = Math.max(maxX - minX, 1e-6);
  const spanY = Math.max(maxY - minY, 1e-6);
  return pts.map((p) => ({
    x: 0.08 + (0.84 * (p.x - minX)) / spanX,
    y: 0.08 + (0.84 * (p.y - minY)) / spanY,
  }));
}
