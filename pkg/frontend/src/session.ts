/** Session controller: owns one game against the service, the current
 * click selection, and the hint overlay.  All game logic stays on the
 * server; this layer only mirrors the legality rules to block bad input
 * early and records a replayable log of the human's moves. */

import { Api, type CreateBody, type GameState, type Hint } from "./api.js";
import {
  adjacencySets,
  submitObjection,
  supplyObjection,
  toggleObjection,
} from "./rules.js";

export type HumanMove =
  | { kind: "mark"; vertices: number[] }
  | { kind: "color"; vertices: number[] }
  | { kind: "request"; vertex: number }
  | { kind: "supply"; color: number };

export class SessionController {
  state!: GameState;
  selection = new Set<number>();
  hint: Hint | null = null;
  lastObjection: string | null = null;
  readonly moveLog: HumanMove[] = [];
  private adj: Set<number>[] = [];

  constructor(readonly api: Api) {}

  async start(body: CreateBody): Promise<GameState> {
    this.state = await this.api.createGame(body);
    this.adj = adjacencySets(this.state.n, this.state.edges);
    this.selection.clear();
    this.hint = null;
    this.moveLog.length = 0;
    return this.state;
  }

  /** Click a vertex.  Returns the rule text when the click is rejected,
   * null when the selection changed. */
  toggle(vertex: number): string | null {
    if (this.state.status !== "active") return "game is finished";
    if (this.state.variant === "isc") {
      // requester mode: a click just picks the single request target
      this.selection.clear();
      this.selection.add(vertex);
      this.lastObjection = null;
      return null;
    }
    if (this.selection.has(vertex)) {
      this.selection.delete(vertex);
      this.lastObjection = null;
      return null;
    }
    const objection = toggleObjection(this.state, this.adj, this.selection, vertex);
    if (objection) {
      this.lastObjection = objection;
      return objection;
    }
    this.selection.add(vertex);
    this.lastObjection = null;
    return null;
  }

  /** Rule text preventing submission right now, or null. */
  submitBlocker(): string | null {
    if (this.state.status !== "active") return "game is finished";
    if (this.state.variant === "slow") {
      return submitObjection(this.state, this.adj, this.selection);
    }
    if (this.state.human_role === "requester") {
      return this.selection.size === 1 ? null : "pick one vertex to request";
    }
    return "supplier submits a color, not vertices";
  }

  /** Submit the current selection as the human's round. */
  async submitRound(): Promise<GameState> {
    const blocker = this.submitBlocker();
    if (blocker) {
      this.lastObjection = blocker;
      throw new Error(blocker);
    }
    const chosen = [...this.selection].sort((a, b) => a - b);
    let move: HumanMove;
    let body: object;
    if (this.state.variant === "slow") {
      if (this.state.human_role === "lister") {
        move = { kind: "mark", vertices: chosen };
        body = { mark: chosen };
      } else {
        move = { kind: "color", vertices: chosen };
        body = { color: chosen };
      }
    } else {
      move = { kind: "request", vertex: chosen[0] };
      body = { request: chosen[0] };
    }
    this.state = await this.api.move(this.state.id, body);
    this.moveLog.push(move);
    this.selection.clear();
    this.hint = null;
    return this.state;
  }

  /** Supplier's half-round: answer the pending request with a color. */
  async supply(color: number): Promise<GameState> {
    const objection = supplyObjection(this.state, color);
    if (objection) {
      this.lastObjection = objection;
      throw new Error(objection);
    }
    this.state = await this.api.move(this.state.id, { color });
    this.moveLog.push({ kind: "supply", color });
    this.hint = null;
    return this.state;
  }

  async loadHint(): Promise<Hint | null> {
    try {
      this.hint = await this.api.hint(this.state.id);
    } catch {
      this.hint = null; // hint unavailable: overlay shows a disabled state
    }
    return this.hint;
  }

  /** Vertices highlighted by the hint overlay (union of optimal moves). */
  hintVertices(): Set<number> {
    const out = new Set<number>();
    if (this.state.status !== "active") return out; // overlay hidden at endgame
    for (const move of this.hint?.moves ?? []) {
      for (const v of move) out.add(v);
    }
    return out;
  }

  /** Replay this session's human moves onto a fresh game; returns the
   * replayed final state (engine moves regenerate deterministically). */
  async replay(body: CreateBody): Promise<GameState> {
    let st = await this.api.createGame(body);
    for (const move of this.moveLog) {
      if (move.kind === "mark") st = await this.api.move(st.id, { mark: move.vertices });
      else if (move.kind === "color")
        st = await this.api.move(st.id, { color: move.vertices });
      else if (move.kind === "request")
        st = await this.api.move(st.id, { request: move.vertex });
      else st = await this.api.move(st.id, { color: move.color });
    }
    return st;
  }
}

/** Built-in boards for the preset picker: the same edge-list text format
 * the file loader and the service accept. */
export function presetGraph(name: string, size: number, seed = 1): string {
  const edges: [number, number][] = [];
  let n = size;
  if (name === "path") {
    for (let i = 0; i + 1 < n; i++) edges.push([i, i + 1]);
  } else if (name === "star") {
    for (let i = 1; i < n; i++) edges.push([0, i]);
  } else if (name === "double-star") {
    const a = Math.floor((n - 2) / 2);
    edges.push([0, 1]);
    for (let i = 0; i < a; i++) edges.push([0, 2 + i]);
    for (let i = 2 + a; i < n; i++) edges.push([1, i]);
  } else if (name === "random-forest") {
    let s = seed >>> 0 || 1;
    const rand = () => {
      // xorshift32: deterministic presets for a given seed
      s ^= s << 13;
      s ^= s >>> 17;
      s ^= s << 5;
      s >>>= 0;
      return s / 0xffffffff;
    };
    for (let i = 1; i < n; i++) {
      if (rand() < 0.12) continue;
      edges.push([Math.floor(rand() * i), i]);
    }
  } else {
    throw new Error(`unknown preset ${name}`);
  }
  const lines = [`${n} ${edges.length}`];
  for (const [u, v] of edges) lines.push(`${u} ${v}`);
  return lines.join("\n") + "\n";
}
