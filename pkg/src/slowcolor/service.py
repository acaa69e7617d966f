"""JSON-over-HTTP play service hosting interactive game sessions.

A session pairs a human role with an engine for the other role.  Slow
variant: lister marks, painter colors; ISC variant: requester names a
vertex, supplier answers a color.  The engine moves immediately after each
human move (and first, at creation, when the engine opens the game), so a
client always sees a state where it is the human's turn or the game is
over.  Sessions live in memory; an optional JSON-lines file records every
creation and move for replay.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from ._live import is_independent
from .exact import SlowExactSolver
from .graphs import CycleDetected, Forest, Graph, ParseError, parse_graph, validate_forest
from .isc import (
    ConstructiveSupplier,
    IscExactSolver,
    ListState,
    _ConstructiveRequester,
    _GameEnded,
    find_list_coloring,
)
from .peel import slow_cost
from .strategies import make_lister, make_painter

SLOW_ENGINE_CAP = 12
ISC_ENGINE_CAP = 6

ROLES = {
    "slow": ("lister", "painter"),
    "isc": ("requester", "supplier"),
}


class CreateGame(BaseModel):
    graph: str
    variant: str = "slow"
    human_role: str = "lister"
    engine: str = "constructive"


class MoveBody(BaseModel):
    mark: Optional[List[int]] = None
    color: Optional[Union[List[int], int]] = None
    request: Optional[int] = None


def _bad(reason: str):
    return HTTPException(status_code=400, detail={"reason": reason})


class _GeneratorRequester:
    """Adapter running the constructive requester as a coroutine: each
    engine request surfaces to the session, which feeds back the supplied
    color."""

    def __init__(self, forest: Forest):
        self.forest = forest
        self.pending: Optional[int] = None
        self._wake = None
        self._thread = None
        self._lock = threading.Lock()
        self._request_box: List[Optional[int]] = [None]
        self._color_box: List[Optional[int]] = [None]
        self._req_ready = threading.Event()
        self._col_ready = threading.Event()
        self._done = False
        self._thread = threading.Thread(target=self._run, daemon=True)
        self._thread.start()
        self._req_ready.wait()

    def _run(self):
        class _Driver:
            def __init__(inner):
                inner.forest = self.forest
                inner.state = ListState(self.forest)
                inner.transcript = []

            def request(inner, x: int) -> int:
                self._request_box[0] = x
                self._req_ready.set()
                self._col_ready.wait()
                self._col_ready.clear()
                c = self._color_box[0]
                inner.state.add(x, c)
                return c

        driver = _Driver()
        try:
            _ConstructiveRequester(driver).run()
        except _GameEnded:
            pass
        finally:
            self._done = True
            self._request_box[0] = None
            self._req_ready.set()

    def next_request(self) -> Optional[int]:
        if self._done:
            return None
        return self._request_box[0]

    def feed(self, color: int) -> None:
        self._req_ready.clear()
        self._color_box[0] = color
        self._col_ready.set()
        self._req_ready.wait()


@dataclass
class GameSession:
    id: str
    variant: str
    graph: Graph
    human_role: str
    engine_kind: str
    forest: Optional[Forest] = None
    status: str = "active"
    history: list = field(default_factory=list)
    # slow state
    live: set = field(default_factory=set)
    score: int = 0
    pending_mark: Optional[frozenset] = None
    # isc state
    lists: Optional[ListState] = None
    pending_request: Optional[int] = None
    lock: threading.Lock = field(default_factory=threading.Lock)
    engines: dict = field(default_factory=dict)
    initial_value: Optional[int] = None
    witness: Optional[tuple] = None


def _session_state(s: GameSession) -> dict:
    out = {
        "id": s.id,
        "variant": s.variant,
        "human_role": s.human_role,
        "engine": s.engine_kind,
        "n": s.graph.n,
        "edges": [[u, v] for u, v in s.graph.edges()],
        "status": s.status,
        "history": list(s.history),
        "value": s.initial_value,
    }
    if s.variant == "slow":
        out["live"] = sorted(s.live)
        out["score"] = s.score
        out["pending_mark"] = sorted(s.pending_mark) if s.pending_mark else None
        if s.status == "finished":
            out["final_score"] = s.score
    else:
        out["lists"] = {str(v): list(l) for v, l in enumerate(s.lists.lists)}
        out["rounds"] = s.lists.request_count
        out["pending_request"] = s.pending_request
        if s.status == "finished":
            out["final_rounds"] = s.lists.request_count
            out["witness"] = list(s.witness) if s.witness else None
    return out


def create_app(persist_path: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="slowcolor play service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: Dict[str, GameSession] = {}
    persist_lock = threading.Lock()

    def persist(event: dict) -> None:
        if persist_path is None:
            return
        with persist_lock:
            with open(persist_path, "a") as fh:
                fh.write(json.dumps(event) + "\n")

    # -- engine plumbing -----------------------------------------------------

    def slow_engine_move(s: GameSession) -> None:
        """Engine plays until it is the human's turn or the game ends."""
        other = "painter" if s.human_role == "lister" else "lister"
        while s.status == "active":
            if s.human_role == "lister":
                if s.pending_mark is None:
                    return  # human to mark
                painter = s.engines["painter"]
                I = painter.respond(s.pending_mark)
                s.live -= set(I)
                for eng in s.engines.values():
                    if hasattr(eng, "note_colored"):
                        eng.note_colored(I)
                s.history.append({"role": other, "color": sorted(I)})
                persist({"session": s.id, "role": other, "color": sorted(I)})
                s.pending_mark = None
                if not s.live:
                    s.status = "finished"
                return
            # human painter: engine lister marks, then waits for the human
            if s.pending_mark is not None:
                return
            if not s.live:
                s.status = "finished"
                return
            lister = s.engines["lister"]
            M = lister.next_mark()
            s.score += len(M)
            s.pending_mark = frozenset(M)
            s.history.append({"role": other, "mark": sorted(M)})
            persist({"session": s.id, "role": other, "mark": sorted(M)})
            return

    def isc_engine_move(s: GameSession) -> None:
        while s.status == "active":
            colorable = find_list_coloring(s.graph, s.lists.lists)
            if colorable is not None:
                s.status = "finished"
                s.witness = colorable
                return
            if s.human_role == "requester":
                if s.pending_request is None:
                    return  # human to request
                v = s.pending_request
                supplier = s.engines["supplier"]
                c = supplier.supply(s.lists, v)
                s.lists.add(v, c)
                s.history.append({"role": "supplier", "vertex": v, "color": c})
                persist({"session": s.id, "role": "supplier", "vertex": v, "color": c})
                s.pending_request = None
                continue
            # human supplier: engine requester names the next vertex
            if s.pending_request is not None:
                return
            req = s.engines["requester"]
            if s.engine_kind == "exact":
                v = req.best_request(s.lists)
            else:
                v = req.next_request()
                if v is None:
                    # strategy exhausted without colorability; should not
                    # happen against legal suppliers
                    s.status = "finished"
                    return
            s.pending_request = v
            s.history.append({"role": "requester", "vertex": v})
            persist({"session": s.id, "role": "requester", "vertex": v})
            return

    # -- endpoints -------------------------------------------------------------

    @app.post("/games", status_code=201)
    def create_game(body: CreateGame):
        if body.variant not in ROLES:
            raise _bad(f"unknown variant {body.variant!r}")
        if body.human_role not in ROLES[body.variant]:
            raise _bad(
                f"role {body.human_role!r} does not play the {body.variant} variant"
            )
        if body.engine not in ("exact", "constructive"):
            raise _bad(f"unknown engine {body.engine!r}")
        try:
            g = parse_graph(body.graph)
        except ParseError as e:
            raise _bad(f"graph rejected: {e}")
        forest: Optional[Forest] = None
        try:
            forest = validate_forest(g)
        except CycleDetected:
            forest = None
        if body.engine == "constructive" and forest is None:
            raise _bad("constructive engines require a forest; use engine=exact")
        cap = SLOW_ENGINE_CAP if body.variant == "slow" else ISC_ENGINE_CAP
        if body.engine == "exact" and g.n > cap:
            raise HTTPException(
                status_code=413,
                detail={"reason": f"graph exceeds the exact-engine cap ({cap})"},
            )

        sid = uuid.uuid4().hex[:12]
        s = GameSession(
            id=sid,
            variant=body.variant,
            graph=g,
            human_role=body.human_role,
            engine_kind=body.engine,
            forest=forest,
        )
        if body.variant == "slow":
            s.live = set(range(g.n))
            if body.engine == "exact":
                solver = SlowExactSolver(g, cap=cap)
                s.engines["solver"] = solver
                s.engines["lister"] = make_lister("exact", g, cap=cap)
                s.engines["painter"] = make_painter("exact", g, cap=cap)
                s.engines["lister"].solver = solver
                s.engines["painter"].solver = solver
                s.initial_value = solver.value()
            else:
                s.engines["lister"] = make_lister("constructive", forest)
                s.engines["painter"] = make_painter("constructive", forest)
                s.initial_value = slow_cost(forest)
            if g.n == 0:
                s.status = "finished"
        else:
            s.lists = ListState(g)
            if body.engine == "exact":
                solver = IscExactSolver(g, cap=cap)
                s.engines["solver"] = solver
                s.engines["requester"] = solver
                s.engines["supplier"] = _ExactSupplierAdapter(solver)
                s.initial_value = solver.value()
            else:
                s.engines["requester"] = _GeneratorRequester(forest)
                s.engines["supplier"] = ConstructiveSupplier(forest)
                s.initial_value = slow_cost(forest)
            if g.n == 0:
                s.status = "finished"
        sessions[sid] = s
        persist(
            {
                "session": sid,
                "create": {
                    "graph": body.graph,
                    "variant": body.variant,
                    "human_role": body.human_role,
                    "engine": body.engine,
                },
            }
        )
        with s.lock:
            if s.variant == "slow":
                slow_engine_move(s)
            else:
                isc_engine_move(s)
        return _session_state(s)

    def _get(sid: str) -> GameSession:
        s = sessions.get(sid)
        if s is None:
            raise HTTPException(status_code=404, detail={"reason": "unknown session"})
        return s

    @app.get("/games/{sid}")
    def get_game(sid: str):
        return _session_state(_get(sid))

    @app.delete("/games/{sid}", status_code=204)
    def delete_game(sid: str):
        _get(sid)
        del sessions[sid]
        return JSONResponse(status_code=204, content=None)

    @app.post("/games/{sid}/move")
    def move(sid: str, body: MoveBody):
        s = _get(sid)
        with s.lock:
            if s.status != "active":
                raise HTTPException(
                    status_code=409, detail={"reason": "game is finished"}
                )
            if s.variant == "slow":
                _slow_human_move(s, body)
                slow_engine_move(s)
            else:
                _isc_human_move(s, body)
                isc_engine_move(s)
            return _session_state(s)

    def _slow_human_move(s: GameSession, body: MoveBody) -> None:
        if s.human_role == "lister":
            if s.pending_mark is not None:
                raise HTTPException(
                    status_code=409, detail={"reason": "move out of turn"}
                )
            if body.mark is None:
                raise _bad("lister move needs a 'mark' list")
            M = set(body.mark)
            if not M:
                raise _bad("empty mark")
            if not M <= s.live:
                raise _bad("mark contains colored or unknown vertices")
            s.score += len(M)
            s.pending_mark = frozenset(M)
            s.history.append({"role": "lister", "mark": sorted(M)})
            persist({"session": s.id, "role": "lister", "mark": sorted(M)})
        else:
            if s.pending_mark is None:
                raise HTTPException(
                    status_code=409, detail={"reason": "move out of turn"}
                )
            if body.color is None or not isinstance(body.color, list):
                raise _bad("painter move needs a 'color' list")
            I = set(int(x) for x in body.color)
            if not I:
                raise _bad("empty mark")
            if not I <= s.pending_mark:
                raise _bad("colored set is not a subset of the mark")
            if not is_independent(s.graph, I):
                raise _bad("not independent")
            s.live -= I
            for eng in s.engines.values():
                if hasattr(eng, "note_colored"):
                    eng.note_colored(I)
            s.history.append({"role": "painter", "color": sorted(I)})
            persist({"session": s.id, "role": "painter", "color": sorted(I)})
            s.pending_mark = None
            if not s.live:
                s.status = "finished"

    def _isc_human_move(s: GameSession, body: MoveBody) -> None:
        if s.human_role == "requester":
            if s.pending_request is not None:
                raise HTTPException(
                    status_code=409, detail={"reason": "move out of turn"}
                )
            if body.request is None:
                raise _bad("requester move needs a 'request' vertex")
            v = body.request
            if not 0 <= v < s.graph.n:
                raise _bad("unknown vertex")
            s.pending_request = v
            s.history.append({"role": "requester", "vertex": v})
            persist({"session": s.id, "role": "requester", "vertex": v})
        else:
            if s.pending_request is None:
                raise HTTPException(
                    status_code=409, detail={"reason": "move out of turn"}
                )
            if body.color is None or isinstance(body.color, list):
                raise _bad("supplier move needs an integer 'color'")
            c = int(body.color)
            v = s.pending_request
            if c in s.lists.lists[v]:
                raise _bad("color already in list")
            s.lists.add(v, c)
            if s.engine_kind == "constructive":
                s.engines["requester"].feed(c)
            s.history.append({"role": "supplier", "vertex": v, "color": c})
            persist({"session": s.id, "role": "supplier", "vertex": v, "color": c})
            s.pending_request = None

    @app.get("/games/{sid}/hint")
    def hint(sid: str):
        s = _get(sid)
        with s.lock:
            if s.status != "active":
                return {"moves": [], "value": 0}
            if s.variant == "slow":
                return _slow_hint(s)
            return _isc_hint(s)

    def _slow_hint(s: GameSession) -> dict:
        residual_value = _slow_residual_value(s)
        if s.human_role == "lister":
            if s.engine_kind == "exact":
                report = s.engines["solver"].lister_moves(s.live)
                moves = [sorted(m) for m in report.connected]
            else:
                plan = make_lister("constructive", s.forest)
                plan.live = frozenset(s.live)
                moves = [sorted(plan.next_mark())]
        else:
            if s.pending_mark is None:
                moves = []
            elif s.engine_kind == "exact":
                moves = [
                    sorted(i)
                    for i in s.engines["solver"].painter_responses(
                        s.live, s.pending_mark
                    )
                ]
            else:
                plan = make_painter("constructive", s.forest)
                plan.live = frozenset(s.live)
                moves = [sorted(plan.respond(s.pending_mark))]
        return {"moves": moves, "value": residual_value}

    def _slow_residual_value(s: GameSession) -> Optional[int]:
        if s.forest is not None:
            sub, old = s.forest.induced(sorted(s.live))
            return slow_cost(Forest(sub.n, sub.adj))
        if s.engine_kind == "exact":
            return s.engines["solver"].value(s.live)
        return None

    def _isc_hint(s: GameSession) -> dict:
        if s.engine_kind == "exact":
            solver: IscExactSolver = s.engines["solver"]
            value = solver.value(s.lists)
            if s.human_role == "requester":
                moves = [[v] for v in solver.optimal_requests(s.lists)]
            elif s.pending_request is not None:
                moves = [[c] for c in solver.optimal_supplies(s.lists, s.pending_request)]
            else:
                moves = []
            return {"moves": moves, "value": value}
        # constructive sessions: exact values only within the solver cap
        value = None
        if s.graph.n <= ISC_ENGINE_CAP:
            value = IscExactSolver(s.graph, cap=ISC_ENGINE_CAP).value(s.lists)
        if s.human_role == "requester":
            moves = []
        elif s.pending_request is not None:
            moves = [[s.lists.next_fresh_color()]]
        else:
            moves = []
        return {"moves": moves, "value": value}

    app.state.sessions = sessions
    return app


class _ExactSupplierAdapter:
    def __init__(self, solver: IscExactSolver):
        self.solver = solver

    def supply(self, state: ListState, v: int) -> int:
        return self.solver.best_supply(state, v)


def replay_session(events: list) -> Optional[dict]:
    """Rebuild a session's final state from its persisted event list by
    re-sending only the human moves into a fresh app (engine moves are
    deterministic and regenerate); used to check replay determinism."""
    from fastapi.testclient import TestClient

    app = create_app()
    client = TestClient(app)
    sid = None
    state = None
    human = None
    for ev in events:
        if "create" in ev:
            human = ev["create"]["human_role"]
            r = client.post("/games", json=ev["create"])
            r.raise_for_status()
            state = r.json()
            sid = state["id"]
            continue
        if ev.get("role") != human:
            continue
        if human == "lister":
            body = {"mark": ev["mark"]}
        elif human == "painter":
            body = {"color": ev["color"]}
        elif human == "requester":
            body = {"request": ev["vertex"]}
        else:
            body = {"color": ev["color"]}
        r = client.post(f"/games/{sid}/move", json=body)
        r.raise_for_status()
        state = r.json()
    return state
