import { layoutGraph, type Point } from "./layout";
import type { SessionView } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 640;

export interface BoardHandlers {
  onVertexClick(vertex: number): void;
}

/** Renders the session onto an SVG element and wires vertex clicks. The
 * rendering is a pure function of the view, so re-rendering after every
 * server response keeps the board an exact mirror of the session state. */
export class Board {
  private positions: Point[] = [];
  private sessionId: string | null = null;
  private hintVertex: number | null = null;

  constructor(
    private svg: SVGSVGElement,
    private handlers: BoardHandlers,
  ) {
    svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  }

  showHint(vertex: number | null): void {
    this.hintVertex = vertex;
  }

  render(view: SessionView): void {
    if (this.sessionId !== view.id) {
      this.positions = layoutGraph(view.graph, view.family);
      this.sessionId = view.id;
      this.hintVertex = null;
    }
    while (this.svg.firstChild) this.svg.removeChild(this.svg.firstChild);
    const pos = (v: number) => ({
      x: this.positions[v].x * SIZE,
      y: this.positions[v].y * SIZE,
    });
    for (const [u, v] of view.graph.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      const a = pos(u);
      const b = pos(v);
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
      line.setAttribute("class", "edge");
      this.svg.appendChild(line);
    }
    const claimed = new Set([...view.state.r_claimed, ...view.state.s_claimed]);
    for (let v = 0; v < view.graph.n; v++) {
      const g = document.createElementNS(SVG_NS, "g");
      const { x, y } = pos(v);
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(x));
      circle.setAttribute("cy", String(y));
      circle.setAttribute("r", "16");
      const cls = ["vertex"];
      if (view.state.r_claimed.includes(v)) cls.push("resolver");
      else if (view.state.s_claimed.includes(v)) cls.push("spoiler");
      else cls.push("free");
      if (v === this.hintVertex && !claimed.has(v)) cls.push("hint");
      circle.setAttribute("class", cls.join(" "));
      circle.addEventListener("click", () => this.handlers.onVertexClick(v));
      g.appendChild(circle);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x));
      label.setAttribute("y", String(y - 22));
      label.setAttribute("class", "vertex-label");
      label.textContent = view.graph.labels?.[v] ?? String(v);
      g.appendChild(label);
      this.svg.appendChild(g);
    }
  }

  /** Brief shake feedback on an illegal click; no server request is made. */
  shake(): void {
    this.svg.classList.remove("shake");
    void this.svg.getBoundingClientRect().width;
    this.svg.classList.add("shake");
  }
}
