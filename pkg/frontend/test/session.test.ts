/** Scripted sessions against a live service: the hint-following Painter
 * must land exactly on the game value, illegal selections must be blocked
 * before any request is sent, and replaying the human move log must
 * reproduce the final score. */

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";

import { Api } from "../src/api.js";
import { SessionController, presetGraph } from "../src/session.js";
import { RULE_NOT_INDEPENDENT } from "../src/rules.js";

const PORT = 8731;
const BASE = `http://127.0.0.1:${PORT}`;
const STAR6 = "7 6\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n";
const P4 = "4 3\n0 1\n1 2\n2 3\n";

let server: ChildProcess;

async function waitForServer(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/games/warmup-probe`);
      if (res.status === 404) return;
    } catch {
      /* not up yet */
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "slowcolor.cli", "serve", "--port", String(PORT)],
    { stdio: "ignore" },
  );
  await waitForServer();
}, 40_000);

afterAll(() => {
  server?.kill();
});

describe("hint-following painter on a six-leaf star", () => {
  it("ends at exactly the game value 10", async () => {
    const controller = new SessionController(new Api(BASE));
    let state = await controller.start({
      graph: STAR6,
      variant: "slow",
      human_role: "painter",
      engine: "exact",
    });
    expect(state.value).toBe(10);
    let guard = 0;
    while (state.status === "active" && guard++ < 20) {
      expect(state.pending_mark).toBeTruthy();
      const hint = await controller.loadHint();
      expect(hint && hint.moves.length).toBeTruthy();
      controller.selection.clear();
      for (const v of hint!.moves[0]) controller.toggle(v);
      state = await controller.submitRound();
    }
    expect(state.status).toBe("finished");
    expect(state.final_score).toBe(10);
  }, 30_000);

  it("rejects dependent coloring selections before submission", async () => {
    const controller = new SessionController(new Api(BASE));
    const state = await controller.start({
      graph: STAR6,
      variant: "slow",
      human_role: "painter",
      engine: "exact",
    });
    const mark = state.pending_mark!;
    // the engine's opening mark contains the center and some leaves;
    // selecting the center and then a leaf must be blocked client-side
    const center = mark.find((v) => v === 0);
    const leaf = mark.find((v) => v !== 0);
    expect(center).toBe(0);
    expect(leaf).toBeTruthy();
    expect(controller.toggle(0)).toBeNull();
    const objection = controller.toggle(leaf!);
    expect(objection).toBe(RULE_NOT_INDEPENDENT);
    expect(controller.selection.has(leaf!)).toBe(false);
    // nothing was sent: the state is untouched and still our turn
    const fresh = await controller.api.getGame(state.id);
    expect(fresh.score).toBe(state.score);
    expect(fresh.pending_mark).toEqual(state.pending_mark);
  }, 30_000);

  it("blocks empty submissions client-side", async () => {
    const controller = new SessionController(new Api(BASE));
    await controller.start({
      graph: P4,
      variant: "slow",
      human_role: "lister",
      engine: "exact",
    });
    expect(controller.submitBlocker()).toBe("empty mark");
    await expect(controller.submitRound()).rejects.toThrow("empty mark");
  }, 30_000);
});

describe("replaying the human move log", () => {
  it("reproduces the final score on a fresh session", async () => {
    const controller = new SessionController(new Api(BASE));
    const body = {
      graph: P4,
      variant: "slow" as const,
      human_role: "lister" as const,
      engine: "exact" as const,
    };
    let state = await controller.start(body);
    while (state.status === "active") {
      const hint = await controller.loadHint();
      controller.selection.clear();
      for (const v of hint!.moves[0]) controller.toggle(v);
      state = await controller.submitRound();
    }
    expect(state.final_score).toBe(6);
    const replayed = await controller.replay(body);
    expect(replayed.status).toBe("finished");
    expect(replayed.final_score).toBe(state.final_score);
    expect(replayed.history).toEqual(state.history);
  }, 30_000);
});

describe("interactive variant over the wire", () => {
  it("plays requester with exact hints to the exact value", async () => {
    const controller = new SessionController(new Api(BASE));
    let state = await controller.start({
      graph: P4,
      variant: "isc",
      human_role: "requester",
      engine: "exact",
    });
    expect(state.value).toBe(6);
    let guard = 0;
    while (state.status === "active" && guard++ < 30) {
      const hint = await controller.loadHint();
      controller.toggle(hint!.moves[0][0]);
      state = await controller.submitRound();
    }
    expect(state.status).toBe("finished");
    expect(state.final_rounds).toBe(6);
    expect(state.witness).toBeTruthy();
  }, 30_000);

  it("lets a human supplier answer a constructive requester", async () => {
    const controller = new SessionController(new Api(BASE));
    let state = await controller.start({
      graph: P4,
      variant: "isc",
      human_role: "supplier",
      engine: "constructive",
    });
    let color = 40;
    let guard = 0;
    while (state.status === "active" && guard++ < 30) {
      expect(state.pending_request).not.toBeNull();
      state = await controller.supply(color++);
    }
    expect(state.status).toBe("finished");
    expect(state.final_rounds).toBeLessThanOrEqual(6);
  }, 30_000);
});

describe("presets", () => {
  it("produce parseable boards the service accepts", async () => {
    const api = new Api(BASE);
    for (const name of ["path", "star", "double-star", "random-forest"]) {
      const text = presetGraph(name, 9);
      const st = await api.createGame({
        graph: text,
        variant: "slow",
        human_role: "lister",
        engine: "constructive",
      });
      expect(st.status).toBe("active");
      expect(st.n).toBe(9);
      await api.deleteGame(st.id);
    }
  }, 30_000);
});
