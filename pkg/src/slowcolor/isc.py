"""The interactive sum choice game on graphs.

Requester names a vertex each round; Supplier must add a color not already
on that vertex's list; the game ends as soon as the lists admit a proper
coloring.  Requester minimizes the number of rounds, Supplier maximizes it.

This module provides the forest formula (shared peel engine with the
slow-coloring cost), an exact small-graph solver over color-renaming- and
automorphism-canonical states, a list-colorability oracle, and constructive
optimal strategies for both roles that scale to large forests:

* The requester works stem by stem.  After initial requests on the stem and
  its leaves, it keeps requesting at the stem while too many leaves share
  the newest stem color, then either frees the reserved color (one extra
  request at each leaf whose list is exactly that color) and recurses beside
  the stem, or recurses through the stem with a one-request credit.
* The supplier composes per-component scripts: star components get an
  initial leaf assignment that balances "i requests at the center plus the
  leaves sharing color i" across i; stems whose leaf count is one below a
  triangular number wrap the recursive inner strategy so the first center
  color is fixed in advance and excess center requests are answered with
  throwaway colors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ._live import find_live_stem, live_components
from .exact import SizeCapExceeded
from .graphs import Forest, Graph, stem_at
from .numbers import is_triangular, tri_index
from .peel import slow_cost

__all__ = [
    "IllegalSupplierMove",
    "ColorNotAtVertex",
    "ListState",
    "find_list_coloring",
    "is_list_colorable",
    "isc_cost",
    "canonical_list_key",
    "IscExactSolver",
    "isc_cost_exact",
    "isc_cost_exact_unreduced",
    "free_color_requests",
    "IscRound",
    "IscPlayResult",
    "ConstructiveSupplier",
    "FreshColorSupplier",
    "ExactSupplier",
    "ExactRequester",
    "RepeatVertexRequester",
    "requester_play",
    "supplier_play",
]

ISC_DEFAULT_CAP = 6


class IllegalSupplierMove(Exception):
    pass


class ColorNotAtVertex(Exception):
    pass


class ListState:
    """Live game state: per-vertex color lists plus the request counter.

    Colors are opaque small integers.  Lists only grow; duplicate supplies
    are illegal and rejected before they mutate the state.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.lists: List[List[int]] = [[] for _ in range(graph.n)]
        self.request_count = 0

    def colors_at(self, v: int) -> Tuple[int, ...]:
        return tuple(self.lists[v])

    def add(self, v: int, c: int) -> None:
        if not 0 <= v < self.graph.n:
            raise ValueError(f"vertex {v} out of range")
        if c in self.lists[v]:
            raise IllegalSupplierMove(f"color {c} already in the list at {v}")
        self.lists[v].append(c)
        self.request_count += 1

    def support_masks(self) -> Tuple[int, ...]:
        """Color classes as vertex bitmasks, sorted (color names forgotten)."""
        support: Dict[int, int] = {}
        for v, lst in enumerate(self.lists):
            for c in lst:
                support[c] = support.get(c, 0) | (1 << v)
        return tuple(sorted(support.values()))

    def next_fresh_color(self) -> int:
        used = {c for lst in self.lists for c in lst}
        c = 0
        while c in used:
            c += 1
        return c

    def copy(self) -> "ListState":
        st = ListState(self.graph)
        st.lists = [list(l) for l in self.lists]
        st.request_count = self.request_count
        return st


# ---------------------------------------------------------------------------
# List-colorability oracle
# ---------------------------------------------------------------------------


def find_list_coloring(g: Graph, lists: Sequence[Iterable[int]]) -> Optional[tuple]:
    """A proper coloring choosing each vertex's color from its list, or None.

    Backtracking over vertices ordered most-constrained-first.
    """
    pools = [sorted(set(lst)) for lst in lists]
    if any(not p for p in pools) and g.n > 0:
        return None
    order = sorted(range(g.n), key=lambda v: (len(pools[v]), v))
    chosen: Dict[int, int] = {}

    def bt(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for c in pools[v]:
            if all(chosen.get(w) != c for w in g.adj[v]):
                chosen[v] = c
                if bt(i + 1):
                    return True
                del chosen[v]
        return False

    if bt(0):
        return tuple(chosen[v] for v in range(g.n))
    return None


def is_list_colorable(g: Graph, lists: Sequence[Iterable[int]]) -> bool:
    return find_list_coloring(g, lists) is not None


# ---------------------------------------------------------------------------
# Forest formula
# ---------------------------------------------------------------------------


def isc_cost(f: Forest) -> int:
    """Interactive sum choice number of a forest.

    The value satisfies the same stem recurrence as the slow-coloring cost,
    so both are computed by the shared peel engine.
    """
    return slow_cost(f)


# ---------------------------------------------------------------------------
# Exact solver
# ---------------------------------------------------------------------------


def _automorphisms(g: Graph) -> List[Tuple[int, ...]]:
    """Brute-force graph automorphisms (intended for n <= 8)."""
    degs = [len(a) for a in g.adj]
    edge_set = {(min(u, v), max(u, v)) for u, v in g.edges()}
    autos = []
    for perm in itertools.permutations(range(g.n)):
        if any(degs[v] != degs[perm[v]] for v in range(g.n)):
            continue
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in edge_set
            for u, v in edge_set
        ):
            autos.append(perm)
    return autos


def _apply_perm(mask: int, perm: Tuple[int, ...]) -> int:
    out = 0
    while mask:
        b = mask & -mask
        out |= 1 << perm[b.bit_length() - 1]
        mask ^= b
    return out


def canonical_list_key(g: Graph, lists: Sequence[Iterable[int]]) -> tuple:
    """Renaming-invariant encoding of (graph, lists): the multiset of color
    supports, minimized over graph automorphisms."""
    support: Dict[int, int] = {}
    for v, lst in enumerate(lists):
        for c in lst:
            support[c] = support.get(c, 0) | (1 << v)
    masks = tuple(sorted(support.values()))
    best = None
    for perm in _automorphisms(g):
        mapped = tuple(sorted(_apply_perm(m, perm) for m in masks))
        if best is None or mapped < best:
            best = mapped
    return best


class IscExactSolver:
    """Exact interactive-sum-choice value by memoized min-max.

    States are multisets of color supports (which vertices share each
    color); supplier moves are reduced to "grow one existing class not yet
    at the vertex, or open a fresh class", which is exhaustive up to color
    renaming.  Three further reductions keep the search tractable:

    * saturation: a vertex holding more colors than its live degree can be
      deleted (any coloring of the rest extends to it greedily, and extra
      requests there only help the supplier);
    * additivity: the value splits over connected components of the live
      graph (requester and supplier can both play the components
      independently);
    * abstraction: component states are memoized under a canonical
      relabeling, so isomorphic residual positions share one entry.
    """

    def __init__(self, g: Graph, cap: int = ISC_DEFAULT_CAP):
        if g.n > cap:
            raise SizeCapExceeded(g.n, cap)
        self.graph = g
        self.deg = [len(a) for a in g.adj]
        self.adj_mask = [0] * g.n
        for v in range(g.n):
            for w in g.adj[v]:
                self.adj_mask[v] |= 1 << w
        self.full = (1 << g.n) - 1
        self._value_memo: Dict[tuple, int] = {}
        self._canon_maps_cache: Dict[int, tuple] = {}
        self._colorable_memo: Dict[tuple, bool] = {}

    # -- live-set machinery ----------------------------------------------------

    def _reduce(self, live: int, masks: Tuple[int, ...]):
        """Saturation closure: drop vertices whose list size exceeds their
        live degree, restricting color supports as vertices go."""
        masks = [m & live for m in masks]
        changed = True
        while changed:
            changed = False
            mm = live
            while mm:
                b = mm & -mm
                mm ^= b
                v = b.bit_length() - 1
                deg_live = (self.adj_mask[v] & live).bit_count()
                count = sum(1 for m in masks if m & b)
                if count >= deg_live + 1:
                    live ^= b
                    masks = [m & ~b for m in masks]
                    changed = True
        return live, tuple(sorted(m for m in masks if m))

    def _components(self, mask: int) -> List[int]:
        comps = []
        rem = mask
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                grow = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    grow |= self.adj_mask[b.bit_length() - 1]
                frontier = grow & mask & ~comp
                comp |= frontier
            comps.append(comp)
            rem &= ~comp
        return comps

    def _canon_maps(self, comp: int):
        """Relabelings of the component onto 0..k-1 that realize its
        canonical adjacency code; computed once per component mask."""
        hit = self._canon_maps_cache.get(comp)
        if hit is not None:
            return hit
        verts = []
        mm = comp
        while mm:
            b = mm & -mm
            mm ^= b
            verts.append(b.bit_length() - 1)
        k = len(verts)
        best_code = None
        best_maps: List[Dict[int, int]] = []
        for perm in itertools.permutations(range(k)):
            pos = {verts[i]: perm[i] for i in range(k)}
            code = tuple(
                sorted(
                    (min(pos[u], pos[w]), max(pos[u], pos[w]))
                    for u in verts
                    for w in self.graph.adj[u]
                    if (comp >> w) & 1 and u < w
                )
            )
            if best_code is None or code < best_code:
                best_code = code
                best_maps = [pos]
            elif code == best_code:
                best_maps.append(pos)
        result = (k, best_code, tuple(best_maps))
        self._canon_maps_cache[comp] = result
        return result

    def _canon_component(self, comp: int, masks: Tuple[int, ...]) -> tuple:
        k, code, maps = self._canon_maps(comp)
        best = None
        for pos in maps:
            mapped = []
            for m in masks:
                out = 0
                mm = m
                while mm:
                    b = mm & -mm
                    mm ^= b
                    out |= 1 << pos[b.bit_length() - 1]
                mapped.append(out)
            mapped = tuple(sorted(mapped))
            if best is None or mapped < best:
                best = mapped
        return (k, code, best)

    def _lists_of(self, masks: Tuple[int, ...]) -> List[List[int]]:
        return [
            [i for i, m in enumerate(masks) if (m >> v) & 1]
            for v in range(self.graph.n)
        ]

    def _comp_colorable(self, comp: int, masks: Tuple[int, ...], key) -> bool:
        hit = self._colorable_memo.get(key)
        if hit is not None:
            return hit
        lists = {}
        mm = comp
        while mm:
            b = mm & -mm
            mm ^= b
            v = b.bit_length() - 1
            lists[v] = [i for i, m in enumerate(masks) if m & b]
        order = sorted(lists, key=lambda v: (len(lists[v]), v))
        chosen: Dict[int, int] = {}

        def bt(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            for c in lists[v]:
                if all(chosen.get(w) != c for w in self.graph.adj[v]):
                    chosen[v] = c
                    if bt(i + 1):
                        return True
                    del chosen[v]
            return False

        ok = bt(0)
        self._colorable_memo[key] = ok
        return ok

    # -- game value ------------------------------------------------------------

    def _class_children(
        self, masks: Tuple[int, ...], v: int
    ) -> List[Tuple[int, ...]]:
        """Successor support multisets after a supply at v: grow one
        existing class avoiding v, or open a fresh class."""
        bit = 1 << v
        out = []
        seen = set()
        for m in set(masks):
            if m & bit:
                continue
            if m in seen:
                continue
            seen.add(m)
            lst = list(masks)
            lst.remove(m)
            lst.append(m | bit)
            out.append(tuple(sorted(lst)))
        out.append(tuple(sorted(masks + (bit,))))
        return out

    def value_of_state(self, live: int, masks: Tuple[int, ...]) -> int:
        live, masks = self._reduce(live, masks)
        if live == 0:
            return 0
        total = 0
        for comp in self._components(live):
            comp_masks = tuple(sorted(m & comp for m in masks if m & comp))
            total += self._solve_component(comp, comp_masks)
        return total

    def _solve_component(self, comp: int, masks: Tuple[int, ...]) -> int:
        key = self._canon_component(comp, masks)
        hit = self._value_memo.get(key)
        if hit is not None:
            return hit
        if self._comp_colorable(comp, masks, key):
            self._value_memo[key] = 0
            return 0
        best = None
        tried = set()
        mm = comp
        while mm:
            b = mm & -mm
            mm ^= b
            v = b.bit_length() - 1
            vkey = self._canon_component(comp, tuple(sorted(masks + (b,))))
            if vkey in tried:
                continue
            tried.add(vkey)
            worst = 0
            for child in self._class_children(masks, v):
                worst = max(worst, self.value_of_state(comp, child))
            cand = 1 + worst
            if best is None or cand < best:
                best = cand
        assert best is not None, "uncolorable component with no candidates"
        self._value_memo[key] = best
        return best

    def value_of_masks(self, masks: Tuple[int, ...]) -> int:
        return self.value_of_state(self.full, masks)

    def value(self, state: Optional[ListState] = None) -> int:
        masks = state.support_masks() if state is not None else ()
        return self.value_of_masks(masks)

    # -- optimal moves (used by play adversaries and the service) -------------

    def _request_candidates(self, masks: Tuple[int, ...]) -> List[int]:
        live, _ = self._reduce(self.full, masks)
        out = []
        mm = live
        while mm:
            b = mm & -mm
            mm ^= b
            out.append(b.bit_length() - 1)
        return out

    def best_request(self, state: ListState) -> int:
        masks = state.support_masks()
        if find_list_coloring(self.graph, state.lists) is not None:
            raise ValueError("game is already over (lists are colorable)")
        best_v, best_val = None, None
        for v in self._request_candidates(masks):
            worst = max(
                self.value_of_masks(ch) for ch in self._class_children(masks, v)
            )
            if best_val is None or 1 + worst < best_val:
                best_val, best_v = 1 + worst, v
        return best_v

    def optimal_requests(self, state: ListState) -> List[int]:
        masks = state.support_masks()
        val = self.value_of_masks(masks)
        out = []
        for v in self._request_candidates(masks):
            worst = max(
                self.value_of_masks(ch) for ch in self._class_children(masks, v)
            )
            if 1 + worst == val:
                out.append(v)
        return out

    def best_supply(self, state: ListState, v: int) -> int:
        """A concrete color (existing or fresh) realizing the supplier max."""
        masks = state.support_masks()
        bit = 1 << v
        support: Dict[int, int] = {}
        for u, lst in enumerate(state.lists):
            for c in lst:
                support[c] = support.get(c, 0) | (1 << u)
        best_color, best_val = None, None
        for c in sorted(support):
            m = support[c]
            if m & bit:
                continue
            lst = sorted(support.values())
            lst.remove(m)
            lst.append(m | bit)
            val = self.value_of_masks(tuple(sorted(lst)))
            if best_val is None or val > best_val:
                best_val, best_color = val, c
        fresh_val = self.value_of_masks(
            tuple(sorted(list(support.values()) + [bit]))
        )
        if best_val is None or fresh_val > best_val:
            best_color = state.next_fresh_color()
        return best_color

    def optimal_supplies(self, state: ListState, v: int) -> List[int]:
        """All optimal concrete colors at v (one representative per class)."""
        masks = state.support_masks()
        target = max(self.value_of_masks(ch) for ch in self._class_children(masks, v))
        bit = 1 << v
        support: Dict[int, int] = {}
        for u, lst in enumerate(state.lists):
            for c in lst:
                support[c] = support.get(c, 0) | (1 << u)
        out = []
        seen_supports = set()
        for c in sorted(support):
            m = support[c]
            if m & bit or m in seen_supports:
                continue
            seen_supports.add(m)
            lst = sorted(support.values())
            lst.remove(m)
            lst.append(m | bit)
            if self.value_of_masks(tuple(sorted(lst))) == target:
                out.append(c)
        if (
            self.value_of_masks(tuple(sorted(list(support.values()) + [bit])))
            == target
        ):
            out.append(state.next_fresh_color())
        return out


def isc_cost_exact(g: Graph, cap: int = ISC_DEFAULT_CAP) -> int:
    """Interactive sum choice number by exact search (small graphs)."""
    return IscExactSolver(g, cap=cap).value()


def isc_cost_exact_unreduced(g: Graph, cap: int = 3) -> int:
    """Reference solver with no class reduction and no canonicalization:
    supplier may pick any color from a finite universe large enough to
    cover every possible request.  Exponential; n <= 3 cross-checks only."""
    if g.n > cap:
        raise SizeCapExceeded(g.n, cap)
    n = g.n
    deg = [len(a) for a in g.adj]
    universe = n + 2 * g.m + 1
    memo: Dict[tuple, int] = {}

    def val(lists: tuple) -> int:
        hit = memo.get(lists)
        if hit is not None:
            return hit
        if find_list_coloring(g, [list(l) for l in lists]) is not None:
            memo[lists] = 0
            return 0
        best = None
        for v in range(n):
            if len(lists[v]) >= deg[v] + 1:
                continue
            worst = 0
            for c in range(universe):
                if c in lists[v]:
                    continue
                child = tuple(
                    tuple(sorted(lists[u] + ((c,) if u == v else ())))
                    for u in range(n)
                )
                worst = max(worst, val(child))
            cand = 1 + worst
            if best is None or cand < best:
                best = cand
        assert best is not None
        memo[lists] = best
        return best

    return val(tuple(() for _ in range(n)))


# ---------------------------------------------------------------------------
# Freeing a color at a stem
# ---------------------------------------------------------------------------


def free_color_requests(state: ListState, v: int, c: int) -> List[int]:
    """Vertices to request when freeing color c at stem v: every leaf
    neighbor of v whose current list is precisely {c}."""
    if c not in state.lists[v]:
        raise ColorNotAtVertex(f"color {c} is not on the list at {v}")
    stem = stem_at(state.graph, v)
    if stem is None:
        raise ValueError(f"vertex {v} is not a stem")
    return [z for z in sorted(stem.leaf_neighbors) if state.lists[z] == [c]]


# ---------------------------------------------------------------------------
# Interactive play: transcripts and harnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IscRound:
    index: int
    vertex: int
    color: int
    count_after: int


@dataclass
class IscPlayResult:
    rounds: int
    state: ListState
    transcript: list
    witness: Optional[tuple]
    finished: bool = True

    def to_text(self) -> str:
        lines = [
            f"{r.index} | request {r.vertex} | color {r.color} | count {r.count_after}"
            for r in self.transcript
        ]
        lines.append(f"rounds: {self.rounds}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "rounds": self.rounds,
            "finished": self.finished,
            "transcript": [
                {
                    "index": r.index,
                    "vertex": r.vertex,
                    "color": r.color,
                    "count": r.count_after,
                }
                for r in self.transcript
            ],
            "lists": {str(v): list(l) for v, l in enumerate(self.state.lists)},
            "witness": list(self.witness) if self.witness else None,
        }


class _GameEnded(Exception):
    """Raised inside the requester recursion when the lists became
    colorable mid-phase."""


class _RequesterDriver:
    """Issues real requests against a supplier handle, validates supplies,
    records the transcript, and stops the run at first colorability."""

    def __init__(self, f: Forest, supplier):
        self.forest = f
        self.supplier = supplier
        self.state = ListState(f)
        self.transcript: List[IscRound] = []

    def request(self, x: int) -> int:
        c = self.supplier.supply(self.state, x)
        self.state.add(x, c)  # raises IllegalSupplierMove on a repeat
        self.transcript.append(
            IscRound(len(self.transcript) + 1, x, c, self.state.request_count)
        )
        if find_list_coloring(self.forest, self.state.lists) is not None:
            raise _GameEnded
        return c


def _pick_color(options: Iterable[int], preferred: Optional[int]) -> int:
    opts = sorted(options)
    if preferred is not None and preferred in opts:
        return preferred
    return opts[0]


class _ConstructiveRequester:
    """Recursive stem-phase strategy; uses at most isc_cost(f) requests
    against any legal supplier."""

    def __init__(self, driver: _RequesterDriver):
        self.driver = driver
        self.forest = driver.forest
        self.credits: Dict[int, int] = {}
        self.prefer: Dict[int, int] = {}
        self.excluded: Dict[int, set] = {}

    def run(self) -> Dict[int, int]:
        return self.play_forest(frozenset(range(self.forest.n)), self.driver.request)

    # `request` is threaded through so that watch wrappers compose.

    def request_initial(self, x: int, request) -> int:
        if x in self.credits:
            return self.credits.pop(x)
        return request(x)

    def play_forest(self, vertices: frozenset, request) -> Dict[int, int]:
        phi: Dict[int, int] = {}
        for comp in live_components(self.forest, vertices):
            phi.update(self.play_component(comp, request))
        return phi

    def play_component(self, comp: frozenset, request) -> Dict[int, int]:
        f = self.forest
        if len(comp) == 1:
            (x,) = comp
            return {x: self.request_initial(x, request)}
        v, R, w = find_live_stem(f, comp)
        r = len(R)
        ur = tri_index(r)
        vcolors = [self.request_initial(v, request)]
        alpha = {z: self.request_initial(z, request) for z in sorted(R)}

        def share(i: int) -> List[int]:
            return [z for z in sorted(R) if alpha[z] == vcolors[i - 1]]

        i = 1
        while len(share(i)) > ur - i + 1:
            vcolors.append(request(v))
            i += 1
            assert i <= ur + 1, "stem request loop exceeded its bound"
        istar = i
        reserved = vcolors[istar - 1]
        s_star = share(istar)

        if len(s_star) <= ur - istar:
            second = {z: request(z) for z in s_star}
            sub_request = self._watched(request, w, reserved) if w is not None else request
            phi = self.play_forest(comp - R - {v}, sub_request)
            phi[v] = reserved
            return self._extend_leaves(phi, v, R, alpha, second)

        if not is_triangular(r + 1):
            phi = self.play_forest(comp - R - {v}, request)
            cprime = phi.get(w)
            if cprime != reserved:
                second = {z: request(z) for z in s_star}
                phi[v] = reserved
            else:
                second, final = self._finish_stem(v, R, alpha, reserved, istar, request)
                phi[v] = final
            return self._extend_leaves(phi, v, R, alpha, second)

        # triangular case: recurse through the stem with a one-request credit
        self.credits[v] = reserved
        self.prefer[v] = reserved
        phi = self.play_forest(comp - R, request)
        cprime = phi[v]
        if cprime == reserved:
            second = {z: request(z) for z in s_star}
        else:
            if w is None or phi.get(w) != reserved:
                raise AssertionError(
                    "reserved color neither used at the stem nor blocking it"
                )
            second, final = self._finish_stem(v, R, alpha, reserved, istar, request)
            phi[v] = final
        return self._extend_leaves(phi, v, R, alpha, second)

    def _finish_stem(self, v, R, alpha, reserved, istar, request):
        """The reserved color is blocked at the neighbor: finish by taking
        the cheapest usable stem color.

        A color costs the number of leaves whose list is exactly it (they
        need one freeing request each); a color already on the stem's list
        (including any obtained while recursing past the stem) costs no new
        stem request.  Requesting yet another stem color costs 1.  Stopping
        as soon as some usable color's leaf-share is at most
        tri_index(r) - istar + 1 - (requests made here) keeps the total
        within budget: the shares of distinct stem colors are disjoint leaf
        groups, so an adversary cannot keep every option expensive for long.
        """
        ur = tri_index(len(R))
        budget = ur - istar + 1
        counts: Dict[int, int] = {}
        for z in R:
            counts[alpha[z]] = counts.get(alpha[z], 0) + 1
        hidden = self.excluded.get(v, set())

        def options() -> Dict[int, int]:
            return {
                c: counts.get(c, 0)
                for c in self.driver.state.lists[v]
                if c != reserved and c not in hidden
            }

        spent = 0
        while True:
            opts = options()
            if opts:
                best = min(opts, key=lambda c: (opts[c], c))
                if opts[best] <= budget - spent:
                    final = best
                    break
            assert spent <= budget + 1, "stem completion exceeded its budget"
            request(v)
            spent += 1
        second = {z: request(z) for z in sorted(R) if alpha[z] == final}
        return second, final

    def _extend_leaves(self, phi, v, R, alpha, second):
        for z in sorted(R):
            options = [alpha[z]] + ([second[z]] if z in second else [])
            options = [c for c in options if c != phi[v]]
            phi[z] = _pick_color(options, self.prefer.get(z))
        return phi

    def _watched(self, request, w: int, reserved: int):
        spent = [False]

        def watched(x: int) -> int:
            c = request(x)
            if x == w and c == reserved and not spent[0]:
                spent[0] = True
                self.excluded.setdefault(w, set()).add(c)
                c = watched(x)
            return c

        return watched


def requester_play(f: Forest, supplier, check_witness: bool = True) -> IscPlayResult:
    """Drive the constructive requester against a supplier handle.

    The run stops the moment the lists admit a proper coloring; the total
    request count is at most isc_cost(f) against any legal supplier.
    """
    driver = _RequesterDriver(f, supplier)
    try:
        phi = _ConstructiveRequester(driver).run()
        if f.n > 0:
            for u, w_ in f.edges():
                assert phi[u] != phi[w_], "strategy produced an improper coloring"
    except _GameEnded:
        pass
    witness = find_list_coloring(f, driver.state.lists) if check_witness else None
    return IscPlayResult(
        rounds=driver.state.request_count,
        state=driver.state,
        transcript=driver.transcript,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# Constructive supplier
# ---------------------------------------------------------------------------


class _ColorAllocator:
    def __init__(self):
        self._next = 0

    def fresh(self) -> int:
        c = self._next
        self._next += 1
        return c


class _JunkNode:
    """Edgeless region: any legal supplier forces one request per vertex."""

    def __init__(self, alloc: _ColorAllocator):
        self.alloc = alloc

    def supply(self, x: int) -> int:
        return self.alloc.fresh()


class _StarNode:
    """Star script: initial leaf colors balance i + (leaves sharing the
    i-th planned center color), forcing leaves + center-index + extras to
    total at least r + tri_index(r) + 1 whatever the requester does."""

    def __init__(self, alloc: _ColorAllocator, center: int, leaves, first_color=None):
        self.alloc = alloc
        self.center = center
        r = len(leaves)
        ur = tri_index(r)
        planned = [first_color if first_color is not None else alloc.fresh()]
        planned += [alloc.fresh() for _ in range(ur)]
        sizes = [ur + 1 - i for i in range(1, ur + 2)]
        rem = r - sum(sizes)
        j = 1
        while rem > 0 and j < len(sizes):
            sizes[j] += 1
            rem -= 1
            j += 1
        if rem > 0:
            sizes[0] += rem
        self.planned = planned
        self.alpha: Dict[int, int] = {}
        ordered = sorted(leaves)
        pos = 0
        for i, a in enumerate(sizes):
            for _ in range(a):
                self.alpha[ordered[pos]] = planned[i]
                pos += 1
        self.center_served = 0
        self.leaf_served = set()

    def supply(self, x: int) -> int:
        if x == self.center:
            self.center_served += 1
            if self.center_served <= len(self.planned):
                return self.planned[self.center_served - 1]
            return self.alloc.fresh()
        if x not in self.leaf_served:
            self.leaf_served.add(x)
            return self.alpha[x]
        return self.alloc.fresh()


class _FixedFirstColorWrap:
    """Fixes the first color supplied at v in advance and answers center
    requests past degree(v)+1 with planned throwaway colors, playing the
    inner strategy as if those requests never happened."""

    def __init__(self, inner, v: int, d: int, tail: List[int], alloc: _ColorAllocator):
        self.inner = inner
        self.v = v
        self.d = d
        self.tail = list(tail)
        self.alloc = alloc
        self.first_color = inner.supply(v)  # pre-fed imagined request
        self.v_requests = 0

    def _next_free(self) -> int:
        if self.tail:
            return self.tail.pop(0)
        return self.alloc.fresh()

    def supply(self, x: int) -> int:
        if x != self.v:
            return self.inner.supply(x)
        self.v_requests += 1
        if self.v_requests == 1:
            return self.first_color
        if self.v_requests <= self.d:
            return self.inner.supply(self.v)
        if self.v_requests == self.d + 1:
            self.inner.supply(self.v)  # imagined supply; discarded
        return self._next_free()


class _TriStemNode:
    """Stem with r+1 triangular: wrap the inner strategy on the forest
    minus the leaves, plan the center colors, and hand the leaves initial
    colors sized tri_index(r), tri_index(r), tri_index(r)-1, ..., 1."""

    def __init__(self, alloc: _ColorAllocator, inner, v: int, leaves):
        r = len(leaves)
        ur = tri_index(r)
        tail = [alloc.fresh() for _ in range(ur)]
        self.wrap = _FixedFirstColorWrap(inner, v, 1, tail, alloc)
        planned = [self.wrap.first_color] + tail
        sizes = [ur] + [ur - i + 2 for i in range(2, ur + 2)]
        assert sum(sizes) == r
        self.alpha: Dict[int, int] = {}
        ordered = sorted(leaves)
        pos = 0
        for i, a in enumerate(sizes):
            for _ in range(a):
                self.alpha[ordered[pos]] = planned[i]
                pos += 1
        self.leaves = set(leaves)
        self.leaf_served = set()
        self.alloc = alloc

    def supply(self, x: int) -> int:
        if x in self.leaves:
            if x not in self.leaf_served:
                self.leaf_served.add(x)
                return self.alpha[x]
            return self.alloc.fresh()
        return self.wrap.supply(x)


class _SplitNode:
    """Independent play on a split-off star and the remainder."""

    def __init__(self, star: _StarNode, star_vertices, rest):
        self.star = star
        self.star_vertices = set(star_vertices)
        self.rest = rest

    def supply(self, x: int) -> int:
        if x in self.star_vertices:
            return self.star.supply(x)
        return self.rest.supply(x)


class _RouterNode:
    """Routes per component of a forest."""

    def __init__(self, route: Dict[int, object], fallback):
        self.route = route
        self.fallback = fallback

    def supply(self, x: int) -> int:
        return self.route.get(x, self.fallback).supply(x)


def _supplier_node(f: Forest, comp: frozenset, alloc: _ColorAllocator):
    if len(comp) == 1:
        return _JunkNode(alloc)
    v, R, w = find_live_stem(f, comp)
    r = len(R)
    if w is None:
        return _StarNode(alloc, v, R)
    if is_triangular(r + 1):
        inner = _supplier_node(f, comp - R, alloc)
        return _TriStemNode(alloc, inner, v, R)
    star = _StarNode(alloc, v, R)
    rest = _supplier_node(f, comp - R - {v}, alloc)
    return _SplitNode(star, R | {v}, rest)


class ConstructiveSupplier:
    """Forces at least isc_cost(f) requests against every requester."""

    def __init__(self, f: Forest):
        alloc = _ColorAllocator()
        route: Dict[int, object] = {}
        fallback = _JunkNode(alloc)
        for comp in live_components(f, range(f.n)):
            node = _supplier_node(f, comp, alloc)
            for x in comp:
                route[x] = node
        self._router = _RouterNode(route, fallback)

    def supply(self, state: ListState, v: int) -> int:
        return self._router.supply(v)


class FreshColorSupplier:
    """Always answers with a brand-new color."""

    def __init__(self):
        self._alloc = _ColorAllocator()

    def supply(self, state: ListState, v: int) -> int:
        return self._alloc.fresh()


class ExactSupplier:
    """Optimal supplier from the exact solver (small graphs)."""

    def __init__(self, g: Graph, cap: int = ISC_DEFAULT_CAP):
        self.solver = IscExactSolver(g, cap=cap)

    def supply(self, state: ListState, v: int) -> int:
        return self.solver.best_supply(state, v)


class ExactRequester:
    """Optimal requester from the exact solver (small graphs)."""

    def __init__(self, g: Graph, cap: int = ISC_DEFAULT_CAP):
        self.solver = IscExactSolver(g, cap=cap)

    def next_request(self, state: ListState) -> int:
        return self.solver.best_request(state)


class RepeatVertexRequester:
    """Degenerate requester that always names the same vertex."""

    def __init__(self, vertex: int = 0):
        self.vertex = vertex

    def next_request(self, state: ListState) -> int:
        return self.vertex


class RandomRequester:
    def __init__(self, rng: random.Random):
        self.rng = rng

    def next_request(self, state: ListState) -> int:
        return self.rng.randrange(state.graph.n)


def supplier_play(
    f: Forest, requester, max_rounds: Optional[int] = None
) -> IscPlayResult:
    """Drive the constructive supplier against a requester handle.

    Stops at first colorability (or at max_rounds for requesters that can
    stall forever); the count is at least isc_cost(f) whenever the game
    actually finishes.
    """
    supplier = ConstructiveSupplier(f)
    state = ListState(f)
    transcript: List[IscRound] = []
    cap = max_rounds if max_rounds is not None else 4 * (f.n + 2 * f.m) + 8
    finished = False
    if find_list_coloring(f, state.lists) is not None:
        finished = True
    while not finished and state.request_count < cap:
        v = requester.next_request(state)
        c = supplier.supply(state, v)
        state.add(v, c)
        transcript.append(IscRound(len(transcript) + 1, v, c, state.request_count))
        if find_list_coloring(f, state.lists) is not None:
            finished = True
    witness = find_list_coloring(f, state.lists)
    return IscPlayResult(
        rounds=state.request_count,
        state=state,
        transcript=transcript,
        witness=witness,
        finished=finished,
    )
