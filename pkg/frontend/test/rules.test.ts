import { describe, expect, it } from "vitest";

import type { GameState } from "../src/api.js";
import {
  RULE_EMPTY_MARK,
  RULE_NOT_INDEPENDENT,
  RULE_OUTSIDE_MARK,
  adjacencySets,
  dependentPair,
  submitObjection,
  supplyObjection,
  toggleObjection,
} from "../src/rules.js";

const starEdges: [number, number][] = [
  [0, 1],
  [0, 2],
  [0, 3],
];

function painterState(pending: number[]): GameState {
  return {
    id: "x",
    variant: "slow",
    human_role: "painter",
    engine: "exact",
    n: 4,
    edges: starEdges,
    status: "active",
    value: 6,
    history: [],
    live: [0, 1, 2, 3],
    score: 3,
    pending_mark: pending,
  };
}

describe("dependentPair", () => {
  it("finds an edge inside the selection", () => {
    const adj = adjacencySets(4, starEdges);
    expect(dependentPair(adj, [0, 2])).toEqual([0, 2]);
    expect(dependentPair(adj, [1, 2, 3])).toBeNull();
  });
});

describe("painter toggling", () => {
  it("rejects dependent selections before submission", () => {
    const st = painterState([0, 1, 2]);
    const adj = adjacencySets(st.n, st.edges);
    const selection = new Set<number>([0]);
    expect(toggleObjection(st, adj, selection, 1)).toBe(RULE_NOT_INDEPENDENT);
    expect(toggleObjection(st, adj, new Set([1]), 2)).toBeNull();
  });

  it("keeps the selection inside the mark", () => {
    const st = painterState([0, 1]);
    const adj = adjacencySets(st.n, st.edges);
    expect(toggleObjection(st, adj, new Set(), 3)).toBe(RULE_OUTSIDE_MARK);
  });

  it("blocks empty submissions with the server's rule text", () => {
    const st = painterState([0, 1]);
    const adj = adjacencySets(st.n, st.edges);
    expect(submitObjection(st, adj, new Set())).toBe(RULE_EMPTY_MARK);
    expect(submitObjection(st, adj, new Set([1]))).toBeNull();
  });
});

describe("lister submissions", () => {
  it("requires live vertices and a nonempty mark", () => {
    const st: GameState = {
      ...painterState([]),
      human_role: "lister",
      pending_mark: null,
      live: [1, 2, 3],
    };
    const adj = adjacencySets(st.n, st.edges);
    expect(submitObjection(st, adj, new Set())).toBe(RULE_EMPTY_MARK);
    expect(submitObjection(st, adj, new Set([0]))).toBeTruthy();
    expect(submitObjection(st, adj, new Set([1, 2]))).toBeNull();
  });
});

describe("supplier colors", () => {
  it("rejects colors already on the list", () => {
    const st: GameState = {
      ...painterState([]),
      variant: "isc",
      human_role: "supplier",
      pending_mark: undefined,
      pending_request: 2,
      lists: { "0": [], "1": [], "2": [5], "3": [] },
    };
    expect(supplyObjection(st, 5)).toBe("color already in list");
    expect(supplyObjection(st, 6)).toBeNull();
  });
});
