/** Client-side mirror of the server's move legality, with the same rule
 * text the service returns.  Used only to block obviously illegal input
 * before it is submitted; the server remains the authority. */

import type { GameState } from "./api.js";

export const RULE_EMPTY_MARK = "empty mark";
export const RULE_NOT_INDEPENDENT = "not independent";
export const RULE_OUTSIDE_MARK = "colored set is not a subset of the mark";
export const RULE_NOT_LIVE = "mark contains colored or unknown vertices";
export const RULE_COLOR_IN_LIST = "color already in list";

export function adjacencySets(n: number, edges: [number, number][]): Set<number>[] {
  const adj: Set<number>[] = Array.from({ length: n }, () => new Set());
  for (const [u, v] of edges) {
    adj[u].add(v);
    adj[v].add(u);
  }
  return adj;
}

/** First edge inside the selection, or null when it is independent. */
export function dependentPair(
  adj: Set<number>[],
  selection: Iterable<number>,
): [number, number] | null {
  const chosen = new Set(selection);
  for (const v of chosen) {
    for (const w of adj[v]) {
      if (w > v && chosen.has(w)) return [v, w];
    }
  }
  return null;
}

/** Why adding `vertex` to the current selection would be illegal for the
 * human's role right now; null when the toggle is fine. */
export function toggleObjection(
  state: GameState,
  adj: Set<number>[],
  selection: Set<number>,
  vertex: number,
): string | null {
  if (state.variant !== "slow") return null;
  if (state.human_role === "lister") {
    if (!state.live || !state.live.includes(vertex)) return RULE_NOT_LIVE;
    return null;
  }
  // painter: selection must stay inside the pending mark and independent
  const mark = state.pending_mark ?? [];
  if (!mark.includes(vertex)) return RULE_OUTSIDE_MARK;
  for (const w of adj[vertex]) {
    if (selection.has(w)) return RULE_NOT_INDEPENDENT;
  }
  return null;
}

/** Why the current selection cannot be submitted; null when legal. */
export function submitObjection(
  state: GameState,
  adj: Set<number>[],
  selection: Set<number>,
): string | null {
  if (selection.size === 0) return RULE_EMPTY_MARK;
  if (state.human_role === "painter") {
    const mark = new Set(state.pending_mark ?? []);
    for (const v of selection) {
      if (!mark.has(v)) return RULE_OUTSIDE_MARK;
    }
    if (dependentPair(adj, selection)) return RULE_NOT_INDEPENDENT;
  } else if (state.human_role === "lister") {
    const live = new Set(state.live ?? []);
    for (const v of selection) {
      if (!live.has(v)) return RULE_NOT_LIVE;
    }
  }
  return null;
}

/** Supplier-side check: the offered color must be new at the pending
 * vertex. */
export function supplyObjection(state: GameState, color: number): string | null {
  const v = state.pending_request;
  if (v == null) return "no pending request";
  const list = state.lists?.[String(v)] ?? [];
  if (list.includes(color)) return RULE_COLOR_IN_LIST;
  return null;
}
