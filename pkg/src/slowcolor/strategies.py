"""Constructive optimal strategies for the slow-coloring game on forests.

Both plans are recomputed from the current live forest every round, so they
stay correct against arbitrary (including off-script) opponents: the live
residual of a forest is a forest, and the stem recurrence applies afresh.

The painter's response machinery mirrors the recurrence's case split.  For a
stem v with leaf set R (r = |R|) and outside neighbor w:

* r+1 not triangular: the component splits into the star on R+{v} and the
  rest A.  Responses are composed per side; if the star side would color v
  while the A side colors w, v is dropped and the star response recomputed
  without it (the vw edge dies that round, so this happens at most once per
  edge).  The r=1 both-marked case is handled specially: color the A-side
  response plus z or v, whichever keeps vw covered for free.
* r+1 triangular: respond on the forest minus R and re-attach the marked
  leaves unless v itself got colored.

The lister marks v plus tri_index(r)+1 leaves when r+1 is triangular and v
plus tri_index(r) leaves otherwise; on an edgeless residual it marks single
isolated vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ._live import (
    find_live_stem as _find_live_stem,
    is_independent as _is_independent,
    live_components as _live_components,
    live_degree as _live_degree,
)
from .exact import EmptyMark, MarkOutsideLive, SlowExactSolver
from .graphs import Forest
from .numbers import is_triangular, tri_index

__all__ = [
    "EmptyMark",
    "MarkOutsideLive",
    "GameOver",
    "IllegalMove",
    "ListerPlan",
    "PainterPlan",
    "RandomLister",
    "RandomPainter",
    "GreedyLister",
    "GreedyPainter",
    "ExactLister",
    "ExactPainter",
    "lister_move",
    "painter_respond",
    "make_lister",
    "make_painter",
    "MatchRound",
    "MatchResult",
    "play_match",
]


class GameOver(Exception):
    pass


class IllegalMove(Exception):
    """A strategy produced an illegal move; carries the partial transcript."""

    def __init__(self, message: str, transcript: list):
        super().__init__(message)
        self.transcript = transcript


# ---------------------------------------------------------------------------
# Constructive plans
# ---------------------------------------------------------------------------


class _BasePlan:
    def __init__(self, forest: Forest):
        self.forest = forest
        self.live = frozenset(range(forest.n))

    def note_colored(self, colored: Iterable[int]) -> None:
        self.live = self.live - frozenset(colored)


class ListerPlan(_BasePlan):
    """Constructive lister: guarantees score >= slow cost of the original
    forest against every painter."""

    def next_mark(self) -> frozenset:
        if not self.live:
            raise GameOver("all vertices are colored")
        f = self.forest
        for comp in _live_components(f, self.live):
            found = _find_live_stem(f, comp)
            if found is None:
                continue
            v, leaves, _ = found
            r = len(leaves)
            k = tri_index(r) + (1 if is_triangular(r + 1) else 0)
            return frozenset([v] + sorted(leaves)[:k])
        return frozenset([min(self.live)])


class PainterPlan(_BasePlan):
    """Constructive painter: guarantees score <= slow cost of the original
    forest against every lister."""

    def respond(self, mark: Iterable[int]) -> frozenset:
        M = frozenset(mark)
        if not M:
            raise EmptyMark("painter needs a nonempty mark")
        if not M <= self.live:
            raise MarkOutsideLive(f"marked vertices {sorted(M - self.live)} not live")
        out: set = set()
        for comp in _live_components(self.forest, self.live):
            mc = M & comp
            if mc:
                out |= self._respond_component(comp, mc)
        return frozenset(out)

    # -- recursion over the stem decomposition ------------------------------

    def _respond_sub(self, sub: frozenset, M: frozenset) -> set:
        out: set = set()
        if not M:
            return out
        for comp in _live_components(self.forest, sub):
            mc = M & comp
            if mc:
                out |= self._respond_component(comp, mc)
        return out

    def _star_respond(
        self, center: int, leaves: frozenset, M: frozenset, attached: bool = False
    ) -> set:
        """Respond within one star.  For a free-standing star both answers
        are exactly evaluable and ties go to the leaves.  For a star split
        off around a stem, coloring the center always detaches the rest at
        exact cost, while coloring leaves is only exact when the residual
        star stays outside the triangular family; at that boundary the
        center wins (the conflict-drop rule covers the outside neighbor)."""
        if center not in M:
            return set(M)
        p = len(M) - 1
        r = len(leaves)
        if attached:
            ur = tri_index(r)
            if p < ur or (p == ur and is_triangular(r - p + 1)):
                return {center}
            return set(M) - {center}
        if p <= tri_index(r - p):
            return {center}
        return set(M) - {center}

    def _respond_component(self, comp: frozenset, M: frozenset) -> set:
        f = self.forest
        if len(comp) == 1:
            return set(M)
        v, R, w = _find_live_stem(f, comp)
        r = len(R)
        if w is None:
            return self._star_respond(v, R, M)
        if not is_triangular(r + 1):
            B = R | {v}
            A = comp - B
            MA = M & A
            MB = M & B
            S = self._respond_sub(A, MA)
            if r == 1 and MB == B:
                # both star vertices marked: one of them can ride along with
                # the A response at no extra cost, covering the cut edge
                (z,) = R
                return S | {z} if w in S else S | {v}
            if not MB:
                return S
            IB = self._star_respond(v, R, MB, attached=True)
            if v not in IB:
                return S | IB
            if w not in S:
                return S | {v}
            # conflict: the star side wants v, the A side colored w
            p = len(MB) - 1
            if p == tri_index(r):
                # boundary tie: coloring w detaches the star, so the marked
                # leaves are exactly evaluable there
                return S | (MB - {v})
            # re-answer A without w's mark and color v; the star side's
            # undershoot (only p+1 <= tri_index(r) marked) pays for w
            S_alt = self._respond_sub(A, MA - {w})
            return S_alt | {v}
        # triangular case: respond relative to the forest minus R
        marked_leaves = M & R
        p = len(marked_leaves)
        if v not in M:
            X = self._respond_sub(comp - R - {v}, M - R)
            return X | marked_leaves
        if p > tri_index(r):
            X = self._respond_sub(comp - R, M - R - {v})
            return X | marked_leaves
        X = self._respond_sub(comp - R, M - R)
        if v in X:
            return X
        return X | marked_leaves


# ---------------------------------------------------------------------------
# Reference strategies: exact engine, random, greedy
# ---------------------------------------------------------------------------


class ExactLister(_BasePlan):
    def __init__(self, forest: Forest, cap: int = 12):
        super().__init__(forest)
        self.solver = SlowExactSolver(forest, cap=cap)

    def next_mark(self) -> frozenset:
        if not self.live:
            raise GameOver("all vertices are colored")
        return self.solver.best_lister_move(self.live)


class ExactPainter(_BasePlan):
    def __init__(self, forest: Forest, cap: int = 12):
        super().__init__(forest)
        self.solver = SlowExactSolver(forest, cap=cap)

    def respond(self, mark: Iterable[int]) -> frozenset:
        return self.solver.best_painter_response(self.live, mark)


class RandomLister(_BasePlan):
    def __init__(self, forest: Forest, rng: random.Random):
        super().__init__(forest)
        self.rng = rng

    def next_mark(self) -> frozenset:
        if not self.live:
            raise GameOver("all vertices are colored")
        pool = sorted(self.live)
        k = self.rng.randint(1, len(pool))
        return frozenset(self.rng.sample(pool, k))


class RandomPainter(_BasePlan):
    def __init__(self, forest: Forest, rng: random.Random):
        super().__init__(forest)
        self.rng = rng

    def respond(self, mark: Iterable[int]) -> frozenset:
        M = sorted(mark)
        self.rng.shuffle(M)
        chosen: set = set()
        for v in M:
            if not (set(self.forest.adj[v]) & chosen):
                chosen.add(v)
        return frozenset(chosen)


class GreedyLister(_BasePlan):
    """Marks the whole vertex set of the largest live component."""

    def next_mark(self) -> frozenset:
        if not self.live:
            raise GameOver("all vertices are colored")
        comps = _live_components(self.forest, self.live)
        return max(comps, key=lambda c: (len(c), -min(c)))


class GreedyPainter(_BasePlan):
    """Colors a large maximal independent subset (ascending live degree)."""

    def respond(self, mark: Iterable[int]) -> frozenset:
        M = sorted(mark, key=lambda v: (_live_degree(self.forest, self.live, v), v))
        chosen: set = set()
        for v in M:
            if not (set(self.forest.adj[v]) & chosen):
                chosen.add(v)
        return frozenset(chosen)


def lister_move(plan) -> frozenset:
    """Next marked set from a lister plan."""
    return plan.next_mark()


def painter_respond(plan, mark: Iterable[int]) -> frozenset:
    """Painter plan's response to a marked set."""
    return plan.respond(mark)


_LISTER_KINDS = {
    "constructive": lambda f, rng, cap: ListerPlan(f),
    "exact": lambda f, rng, cap: ExactLister(f, cap=cap),
    "random": lambda f, rng, cap: RandomLister(f, rng),
    "greedy": lambda f, rng, cap: GreedyLister(f),
}

_PAINTER_KINDS = {
    "constructive": lambda f, rng, cap: PainterPlan(f),
    "exact": lambda f, rng, cap: ExactPainter(f, cap=cap),
    "random": lambda f, rng, cap: RandomPainter(f, rng),
    "greedy": lambda f, rng, cap: GreedyPainter(f),
}


def make_lister(kind: str, forest: Forest, rng: Optional[random.Random] = None,
                cap: int = 12):
    if kind not in _LISTER_KINDS:
        raise ValueError(f"unknown lister kind {kind!r}")
    return _LISTER_KINDS[kind](forest, rng or random.Random(0), cap)


def make_painter(kind: str, forest: Forest, rng: Optional[random.Random] = None,
                 cap: int = 12):
    if kind not in _PAINTER_KINDS:
        raise ValueError(f"unknown painter kind {kind!r}")
    return _PAINTER_KINDS[kind](forest, rng or random.Random(0), cap)


# ---------------------------------------------------------------------------
# Match harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchRound:
    index: int
    marked: tuple
    colored: tuple
    score_after: int


@dataclass
class MatchResult:
    score: int
    rounds: list = field(default_factory=list)

    def to_text(self) -> str:
        lines = [
            f"{r.index} | mark {' '.join(map(str, r.marked))}"
            f" | color {' '.join(map(str, r.colored))} | score {r.score_after}"
            for r in self.rounds
        ]
        lines.append(f"final score: {self.score}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "score": self.score,
            "rounds": [
                {
                    "index": r.index,
                    "marked": list(r.marked),
                    "colored": list(r.colored),
                    "score": r.score_after,
                }
                for r in self.rounds
            ],
        }


def play_match(
    f: Forest,
    lister="constructive",
    painter="constructive",
    seed: int = 0,
    cap: int = 12,
) -> MatchResult:
    """Run one slow-coloring match and return the score with a transcript.

    `lister`/`painter` are strategy kinds ("constructive", "exact", "random",
    "greedy") or already-built plan objects.  Illegal moves abort with the
    partial transcript attached.
    """
    rng = random.Random(seed)
    lp = make_lister(lister, f, rng, cap) if isinstance(lister, str) else lister
    pp = make_painter(painter, f, rng, cap) if isinstance(painter, str) else painter
    live = set(range(f.n))
    score = 0
    rounds: list = []
    idx = 0
    while live:
        idx += 1
        M = frozenset(lister_move(lp))
        if not M:
            raise IllegalMove("lister marked the empty set", rounds)
        if not M <= live:
            raise IllegalMove(f"lister marked non-live vertices {sorted(M - live)}", rounds)
        score += len(M)
        I = frozenset(painter_respond(pp, M))
        if not I:
            raise IllegalMove("painter colored the empty set", rounds)
        if not I <= M:
            raise IllegalMove(f"painter colored outside the mark {sorted(I - M)}", rounds)
        if not _is_independent(f, I):
            raise IllegalMove(f"painter colored a dependent set {sorted(I)}", rounds)
        live -= I
        lp.note_colored(I)
        pp.note_colored(I)
        rounds.append(MatchRound(idx, tuple(sorted(M)), tuple(sorted(I)), score))
    return MatchResult(score, rounds)
