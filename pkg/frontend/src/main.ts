/** Wiring: controls, board, session loop. */

import { Api, type CreateBody, type Engine, type Role, type Variant } from "./api.js";
import { Board, tickerText } from "./render.js";
import { SessionController, presetGraph } from "./session.js";

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

const api = new Api(
  (document.querySelector("meta[name=api-base]") as HTMLMetaElement)?.content ??
    "http://127.0.0.1:8000",
);
const controller = new SessionController(api);
let board: Board;

function setMessage(text: string, isError = false): void {
  const el = $("#message".slice(1));
  el.textContent = text;
  el.className = isError ? "message error" : "message";
}

function refresh(): void {
  const st = controller.state;
  board.render(st, controller.selection, controller.hintVertices());
  $("ticker").textContent = tickerText(st);
  const role = st.human_role;
  const turn =
    st.status === "finished"
      ? "game over"
      : role === "painter" && st.pending_mark
        ? "color an independent subset of the mark"
        : role === "lister" && !st.pending_mark
          ? "mark a nonempty set of uncolored vertices"
          : role === "requester" && st.pending_request == null
            ? "pick a vertex to request"
            : role === "supplier" && st.pending_request != null
              ? `supply a new color at vertex ${st.pending_request}`
              : "waiting for the engine";
  $("turn").textContent = turn;
  const supplier = role === "supplier" && st.status === "active";
  $("supply-row").style.display = supplier ? "" : "none";
  $("submit").style.display =
    st.status === "active" && role !== "supplier" ? "" : "none";
  if (st.status === "finished") {
    const got = st.variant === "slow" ? st.final_score : st.final_rounds;
    setMessage(`finished: ${got} vs game value ${st.value}`);
  }
  const h = controller.hint;
  $("hint-value").textContent =
    h == null
      ? "hint unavailable"
      : `residual value ${h.value ?? "?"}; ${h.moves.length} optimal move(s)`;
}

async function startGame(): Promise<void> {
  const graph =
    ($("graph-text") as HTMLTextAreaElement).value.trim() + "\n";
  const body: CreateBody = {
    graph,
    variant: ($("variant") as HTMLSelectElement).value as Variant,
    human_role: ($("role") as HTMLSelectElement).value as Role,
    engine: ($("engine") as HTMLSelectElement).value as Engine,
  };
  try {
    await controller.start(body);
    setMessage("game on");
  } catch (e) {
    setMessage(String(e), true);
    return;
  }
  refresh();
}

function wire(): void {
  board = new Board($("board") as unknown as SVGSVGElement, {
    onVertexClick(v) {
      if (!controller.state) return;
      const objection = controller.toggle(v);
      if (objection) setMessage(objection, true);
      else setMessage("");
      refresh();
    },
  });

  $("preset").addEventListener("change", () => {
    const sel = ($("preset") as HTMLSelectElement).value;
    if (!sel) return;
    const [name, size] = sel.split(":");
    ($("graph-text") as HTMLTextAreaElement).value = presetGraph(
      name,
      Number(size),
    );
  });
  $("start").addEventListener("click", () => void startGame());
  $("submit").addEventListener("click", async () => {
    try {
      await controller.submitRound();
      setMessage("");
    } catch (e) {
      setMessage(String(e), true);
    }
    refresh();
  });
  $("supply-btn").addEventListener("click", async () => {
    const c = Number(($("supply-color") as HTMLInputElement).value);
    try {
      await controller.supply(c);
      setMessage("");
    } catch (e) {
      setMessage(String(e), true);
    }
    refresh();
  });
  $("hint-btn").addEventListener("click", async () => {
    await controller.loadHint();
    refresh();
  });
  $("clear").addEventListener("click", () => {
    controller.selection.clear();
    refresh();
  });
}

wire();
