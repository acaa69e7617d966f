"""Exact minimax solver for the slow-coloring game on small graphs.

Positions are bitmasks of still-uncolored vertices over a fixed base graph.
Lister candidates are restricted to connected marked sets and Painter
candidates to maximal independent subsets of the mark; both restrictions
preserve the game value (cross-checked against a fully unrestricted solver
in the tests).  Values are memoized per connected component, exploiting the
history-independence of optimal play and additivity over components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graphs import Graph

__all__ = [
    "SizeCapExceeded",
    "EmptyPosition",
    "EmptyMark",
    "MarkOutsideLive",
    "SolveEntry",
    "ListerMoveReport",
    "SlowExactSolver",
    "slow_cost_exact",
    "slow_cost_exact_unrestricted",
]

HARD_CAP = 20
EXHAUSTIVE_LIMIT = 16


class SizeCapExceeded(Exception):
    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices, solver cap is {cap}")
        self.n, self.cap = n, cap


class EmptyPosition(Exception):
    pass


class EmptyMark(Exception):
    pass


class MarkOutsideLive(Exception):
    pass


@dataclass(frozen=True)
class SolveEntry:
    """Solved position: value, optimal connected marks, and for each such
    mark the set of optimal painter responses."""

    value: int
    best_marks: tuple
    best_responses: dict


@dataclass(frozen=True)
class ListerMoveReport:
    """Optimal lister marks at a position.  `connected` always holds every
    optimal connected mark; `disconnected` is populated only when the
    exhaustive flag was set and lists optimal disconnected marks."""

    value: int
    connected: tuple
    disconnected: Optional[tuple] = None

    @property
    def has_disconnected_optimum(self) -> Optional[bool]:
        if self.disconnected is None:
            return None
        return len(self.disconnected) > 0


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class SlowExactSolver:
    """Memoized max-min solver owning one base graph."""

    def __init__(self, g: Graph, cap: int = 12):
        if cap > HARD_CAP:
            raise ValueError(f"cap {cap} exceeds hard maximum {HARD_CAP}")
        if g.n > cap:
            raise SizeCapExceeded(g.n, cap)
        self.graph = g
        self.full_mask = (1 << g.n) - 1
        self.adj_mask = [0] * g.n
        for v in range(g.n):
            for w in g.adj[v]:
                self.adj_mask[v] |= 1 << w
        self._memo: dict = {}
        self._mis_cache: dict = {}

    # -- position helpers ---------------------------------------------------

    def mask_of(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            m |= 1 << v
        return m

    def set_of(self, mask: int) -> frozenset:
        return frozenset(_bits(mask))

    def _components_of(self, mask: int) -> list:
        comps = []
        rem = mask
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self.adj_mask[v]
                frontier = grow & mask & ~comp
                comp |= frontier
            comps.append(comp)
            rem &= ~comp
        return comps

    def _connected_subsets(self, live: int) -> Iterator[int]:
        """All nonempty subsets of `live` inducing a connected subgraph,
        each exactly once (enumerated by lowest member)."""
        adj = self.adj_mask
        for v in _bits(live):
            allowed = live & ~((1 << (v + 1)) - 1)  # strictly above v
            root = 1 << v
            stack = [(root, adj[v] & allowed, 0)]
            while stack:
                S, nb, banned = stack.pop()
                yield S
                ext = nb & ~S & ~banned
                for b in map(lambda x: 1 << x, _bits(ext)):
                    w = b.bit_length() - 1
                    stack.append((S | b, nb | (adj[w] & allowed), banned))
                    banned |= b

    def _mis_list(self, M: int) -> tuple:
        """Maximal independent subsets of the subgraph induced by mask M."""
        hit = self._mis_cache.get(M)
        if hit is not None:
            return hit
        adj = self.adj_mask
        cadj = {v: M & ~adj[v] & ~(1 << v) for v in _bits(M)}
        out = []

        def bk(clique: int, P: int, X: int):
            if P == 0 and X == 0:
                out.append(clique)
                return
            pivot_pool = P | X
            pivot = max(
                _bits(pivot_pool), key=lambda u: (P & cadj[u]).bit_count()
            )
            cand = P & ~cadj[pivot]
            while cand:
                b = cand & -cand
                cand ^= b
                v = b.bit_length() - 1
                bk(clique | b, P & cadj[v], X & cadj[v])
                P &= ~b
                X |= b

        bk(0, M, 0)
        result = tuple(out)
        self._mis_cache[M] = result
        return result

    # -- values -------------------------------------------------------------

    def value_of_mask(self, mask: int) -> int:
        total = 0
        for comp in self._components_of(mask):
            if comp & (comp - 1) == 0:
                total += 1
            else:
                total += self._solve_component(comp)
        return total

    def _solve_component(self, comp: int) -> int:
        hit = self._memo.get(comp)
        if hit is not None:
            return hit
        best = 0
        for M in self._connected_subsets(comp):
            resp = None
            for I in self._mis_list(M):
                val = self.value_of_mask(comp & ~I)
                if resp is None or val < resp:
                    resp = val
            cand = M.bit_count() + resp
            if cand > best:
                best = cand
        self._memo[comp] = best
        return best

    def value(self, live: Optional[Iterable[int]] = None) -> int:
        mask = self.full_mask if live is None else self.mask_of(live)
        return self.value_of_mask(mask)

    # -- move extraction ----------------------------------------------------

    def _mark_candidate_value(self, live: int, M: int) -> int:
        return M.bit_count() + min(
            self.value_of_mask(live & ~I) for I in self._mis_list(M)
        )

    def lister_moves(
        self, live: Optional[Iterable[int]] = None, exhaustive: bool = False
    ) -> ListerMoveReport:
        mask = self.full_mask if live is None else self.mask_of(live)
        if mask == 0:
            raise EmptyPosition("no uncolored vertices remain")
        total = self.value_of_mask(mask)
        connected = []
        for comp in self._components_of(mask):
            comp_value = self.value_of_mask(comp)
            rest = total - comp_value
            for M in self._connected_subsets(comp):
                if rest + self._mark_candidate_value(comp, M) == total:
                    connected.append(self.set_of(M))
        connected.sort(key=sorted)
        disconnected = None
        if exhaustive:
            if mask.bit_count() > EXHAUSTIVE_LIMIT:
                raise SizeCapExceeded(mask.bit_count(), EXHAUSTIVE_LIMIT)
            connected_set = {frozenset(s) for s in connected}
            disconnected = []
            sub = mask
            while sub:
                if (
                    self.set_of(sub) not in connected_set
                    and self._mark_candidate_value(mask, sub) == total
                ):
                    disconnected.append(self.set_of(sub))
                sub = (sub - 1) & mask
            disconnected.sort(key=sorted)
            disconnected = tuple(disconnected)
        return ListerMoveReport(total, tuple(connected), disconnected)

    def painter_responses(
        self, live: Optional[Iterable[int]], M: Iterable[int]
    ) -> tuple:
        mask = self.full_mask if live is None else self.mask_of(live)
        m = self.mask_of(M)
        if m == 0:
            raise EmptyMark("painter response requires a nonempty mark")
        if m & ~mask:
            raise MarkOutsideLive(
                f"marked vertices {sorted(_bits(m & ~mask))} are not live"
            )
        options = self._mis_list(m)
        vals = [self.value_of_mask(mask & ~I) for I in options]
        best = min(vals)
        out = [self.set_of(I) for I, v in zip(options, vals) if v == best]
        out.sort(key=sorted)
        return tuple(out)

    def entry(self, live: Optional[Iterable[int]] = None) -> SolveEntry:
        mask = self.full_mask if live is None else self.mask_of(live)
        report = self.lister_moves(self.set_of(mask))
        responses = {
            mark: self.painter_responses(self.set_of(mask), mark)
            for mark in report.connected
        }
        return SolveEntry(report.value, report.connected, responses)

    def best_lister_move(self, live: Optional[Iterable[int]] = None) -> frozenset:
        """Lexicographically smallest optimal connected mark."""
        return min(self.lister_moves(live).connected, key=sorted)

    def best_painter_response(
        self, live: Optional[Iterable[int]], M: Iterable[int]
    ) -> frozenset:
        return min(self.painter_responses(live, M), key=sorted)

    def table_json(self) -> dict:
        """Solved-position dump: component mask -> value."""
        return {str(mask): val for mask, val in sorted(self._memo.items())}


def slow_cost_exact(g: Graph, cap: int = 12) -> int:
    """Game value of the slow-coloring game on g (memoized max-min)."""
    return SlowExactSolver(g, cap=cap).value()


def slow_cost_exact_unrestricted(g: Graph, cap: int = 7) -> int:
    """Reference solver with no move restrictions: lister may mark any
    nonempty subset, painter may color any nonempty independent subset.
    Exponentially slower; retained for small-n cross-checks."""
    if g.n > cap:
        raise SizeCapExceeded(g.n, cap)
    adj_mask = [0] * g.n
    for v in range(g.n):
        for w in g.adj[v]:
            adj_mask[v] |= 1 << w
    full = (1 << g.n) - 1
    independent = [True] * (full + 1)
    for mask in range(1, full + 1):
        b = mask & -mask
        v = b.bit_length() - 1
        rest = mask ^ b
        independent[mask] = independent[rest] and not (adj_mask[v] & rest)
    memo = {0: 0}

    def val(live: int) -> int:
        hit = memo.get(live)
        if hit is not None:
            return hit
        best = 0
        M = live
        while M:
            resp = None
            I = M
            while I:
                if independent[I]:
                    child = val(live & ~I)
                    if resp is None or child < resp:
                        resp = child
                I = (I - 1) & M
            cand = M.bit_count() + resp
            if cand > best:
                best = cand
            M = (M - 1) & live
        memo[live] = best
        return best

    return val(full)
