/** SVG board rendering: vertices on the radial layout, edge lines, state
 * classes (live / marked / colored / selected / hinted), and list labels
 * in interactive mode. */

import type { GameState } from "./api.js";
import { layoutForest, type Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardCallbacks {
  onVertexClick(v: number): void;
}

export class Board {
  private positions: Point[] = [];

  constructor(
    private svg: SVGSVGElement,
    private callbacks: BoardCallbacks,
  ) {}

  render(state: GameState, selection: Set<number>, hinted: Set<number>): void {
    const width = this.svg.viewBox.baseVal.width || 800;
    const height = this.svg.viewBox.baseVal.height || 520;
    this.positions = layoutForest(state.n, state.edges, width * 0.9, height * 0.9);
    const pad = { x: width * 0.05, y: height * 0.05 };
    this.svg.replaceChildren();

    for (const [u, v] of state.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(this.positions[u].x + pad.x));
      line.setAttribute("y1", String(this.positions[u].y + pad.y));
      line.setAttribute("x2", String(this.positions[v].x + pad.x));
      line.setAttribute("y2", String(this.positions[v].y + pad.y));
      line.setAttribute("class", "edge");
      this.svg.appendChild(line);
    }

    const live = new Set(state.live ?? Array.from({ length: state.n }, (_, i) => i));
    const marked = new Set(state.pending_mark ?? []);
    for (let v = 0; v < state.n; v++) {
      const g = document.createElementNS(SVG_NS, "g");
      const c = document.createElementNS(SVG_NS, "circle");
      const p = this.positions[v];
      c.setAttribute("cx", String(p.x + pad.x));
      c.setAttribute("cy", String(p.y + pad.y));
      c.setAttribute("r", "14");
      const classes = ["vertex"];
      if (state.variant === "slow" && !live.has(v)) classes.push("colored");
      if (marked.has(v)) classes.push("marked");
      if (selection.has(v)) classes.push("selected");
      if (hinted.has(v)) classes.push("hinted");
      if (state.variant === "isc" && state.pending_request === v)
        classes.push("requested");
      c.setAttribute("class", classes.join(" "));
      c.addEventListener("click", () => this.callbacks.onVertexClick(v));
      g.appendChild(c);

      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(p.x + pad.x));
      label.setAttribute("y", String(p.y + pad.y + 4));
      label.setAttribute("class", "vertex-label");
      label.textContent = String(v);
      g.appendChild(label);

      if (state.variant === "isc") {
        const list = state.lists?.[String(v)] ?? [];
        const tag = document.createElementNS(SVG_NS, "text");
        tag.setAttribute("x", String(p.x + pad.x));
        tag.setAttribute("y", String(p.y + pad.y + 28));
        tag.setAttribute("class", "list-label");
        tag.textContent = list.length ? `{${list.join(",")}}` : "∅";
        g.appendChild(tag);
      }
      this.svg.appendChild(g);
    }
  }
}

export function tickerText(state: GameState): string {
  if (state.variant === "slow") {
    const score = state.status === "finished" ? state.final_score : state.score;
    const target = state.value == null ? "?" : state.value;
    return `score ${score ?? 0} / game value ${target}`;
  }
  const rounds = state.status === "finished" ? state.final_rounds : state.rounds;
  const target = state.value == null ? "?" : state.value;
  return `rounds ${rounds ?? 0} / game value ${target}`;
}
