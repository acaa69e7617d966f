"""Extremal-tree characterizations for the sum-color cost.

An n-vertex forest attains the maximum floor(3n/2) exactly when it has a
spanning subforest in which every vertex has degree 1 or 3, except one
vertex of degree 0 or 6 when n is odd (the witness).  The minimum over
n-vertex trees is n + tri_index(n-1), attained by the star alone unless
n-1 or n-2 is triangular, in which case a short list of near-stars joins
it (every 7-vertex tree, and two extra shapes at n=11).

`census` verifies both characterizations exhaustively per n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set

from .graphs import Forest, canonical_code, enumerate_trees
from .numbers import is_triangular, tri_index
from .peel import slow_cost

__all__ = [
    "Witness",
    "TreeShape",
    "NotConnected",
    "MinimizerFamily",
    "max_witness",
    "brute_force_witness",
    "classify_shape",
    "expected_minimizers",
    "CensusRow",
    "CensusReport",
    "census",
]

_ALLOWED_EXTRA_DEGREES = (0, 6)


class NotConnected(Exception):
    pass


@dataclass(frozen=True)
class Witness:
    """Spanning subforest with all degrees 1 or 3, plus one exceptional
    vertex of degree 0 or 6 when the vertex count is odd."""

    edges: frozenset
    exception_vertex: Optional[int]


@dataclass(frozen=True)
class TreeShape:
    """Recognized tree shape: star / double star / subdivided double star /
    other.  Double-star parameters are normalized to a <= b."""

    kind: str
    a: Optional[int] = None
    b: Optional[int] = None

    @staticmethod
    def star(n: int) -> "TreeShape":
        return TreeShape("star", n)

    @staticmethod
    def double_star(a: int, b: int) -> "TreeShape":
        lo, hi = min(a, b), max(a, b)
        return TreeShape("double_star", lo, hi)

    @staticmethod
    def subdivided_double_star(a: int, b: int) -> "TreeShape":
        lo, hi = min(a, b), max(a, b)
        return TreeShape("subdivided_double_star", lo, hi)

    @staticmethod
    def other() -> "TreeShape":
        return TreeShape("other")

    def label(self) -> str:
        if self.kind == "star":
            return f"Star({self.a})"
        if self.kind == "double_star":
            return f"S({self.a},{self.b})"
        if self.kind == "subdivided_double_star":
            return f"S'({self.a},{self.b})"
        return "Other"


def _witness_degrees_ok(degrees: List[int], n: int) -> Optional[Optional[int]]:
    """Check the witness degree condition; returns the exception vertex
    wrapped in a one-element list convention: None means invalid, [x]
    means valid with exception x (x may be None for even n)."""
    exception = None
    for v, d in enumerate(degrees):
        if d in (1, 3):
            continue
        if n % 2 == 1 and d in _ALLOWED_EXTRA_DEGREES and exception is None:
            exception = v
            continue
        return None
    if n % 2 == 1 and exception is None:
        return None
    return [exception]


def brute_force_witness(f: Forest) -> Optional[Witness]:
    """Exhaustive edge-subset search for a witness (oracle, small n)."""
    edges = list(f.edges())
    n = f.n
    for k in range(len(edges), -1, -1):
        for subset in combinations(edges, k):
            deg = [0] * n
            for u, v in subset:
                deg[u] += 1
                deg[v] += 1
            res = _witness_degrees_ok(deg, n)
            if res is not None:
                return Witness(frozenset(subset), res[0])
    return None


def max_witness(f: Forest) -> Optional[Witness]:
    """Witness spanning subforest, or None if no witness exists.

    Rooted DP per component; the state is (vertex, parent edge taken,
    exceptions used below), with the single odd-n exception budget threaded
    across components.
    """
    n = f.n
    if n == 0:
        return Witness(frozenset(), None)
    budget = 1 if n % 2 == 1 else 0

    comp_results = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        order = []
        stack = [(root, -1)]
        seen[root] = True
        while stack:
            x, p = stack.pop()
            order.append((x, p))
            for y in f.adj[x]:
                if y != p:
                    seen[y] = True
                    stack.append((y, x))

        # feas[x][(parent_edge, exc_used)] = (child choices, exception vertex)
        feas: Dict[int, Dict[tuple, tuple]] = {}
        for x, p in reversed(order):
            children = [y for y in f.adj[x] if y != p]
            feas[x] = {}
            for parent_edge in (0, 1) if p != -1 else (0,):
                # knapsack over children: (degree so far, exceptions used)
                states: Dict[tuple, tuple] = {(0, 0): ()}
                for c in children:
                    nxt: Dict[tuple, tuple] = {}
                    for (d, e), choice in states.items():
                        for (edge_used, sub_e), sub in feas[c].items():
                            nd = d + edge_used
                            ne = e + sub_e
                            if nd > 6 or ne > budget:
                                continue
                            key = (nd, ne)
                            if key not in nxt:
                                nxt[key] = choice + ((c, edge_used, sub_e),)
                    states = nxt
                for (d, e), choice in states.items():
                    total_deg = d + parent_edge
                    if total_deg in (1, 3):
                        key = (parent_edge, e)
                        if key not in feas[x]:
                            feas[x][key] = (choice, None)
                    if (
                        budget > 0
                        and e + 1 <= budget
                        and total_deg in _ALLOWED_EXTRA_DEGREES
                    ):
                        key = (parent_edge, e + 1)
                        if key not in feas[x]:
                            feas[x][key] = (choice, x)
        comp_results.append((root, feas))

    # Assign the exception budget across components: each component offers
    # exception counts it can realize; totals must equal `budget` exactly.
    offers = []
    for root, feas in comp_results:
        can = {e for (pe, e) in feas[root] if pe == 0}
        if not can:
            return None
        offers.append((root, feas, can))
    forced = [o for o in offers if o[2] == {1}]
    if len(forced) > budget:
        return None
    spender = None
    if budget == 1:
        if forced:
            spender = forced[0][0]
        else:
            volunteers = [o for o in offers if 1 in o[2]]
            if not volunteers:
                return None
            spender = volunteers[0][0]

    chosen_edges: Set[tuple] = set()
    exception: Optional[int] = None

    def take(x: int, parent_edge: int, exc: int, feas):
        nonlocal exception
        choice, exc_vertex = feas[x][(parent_edge, exc)]
        if exc_vertex is not None:
            exception = exc_vertex
        for c, edge_used, sub_e in choice:
            if edge_used:
                chosen_edges.add((min(x, c), max(x, c)))
            take(c, edge_used, sub_e, feas)

    for root, feas, can in offers:
        e = 1 if root == spender else 0
        if e not in can:
            return None
        take(root, 0, e, feas)
    return Witness(frozenset(chosen_edges), exception)


def classify_shape(t: Forest) -> TreeShape:
    """Exact recognizer for star / double star / subdivided double star."""
    comps = t.components()
    if len(comps) != 1:
        raise NotConnected(f"shape classification needs a tree, got {len(comps)} components")
    n = t.n
    if n == 1:
        return TreeShape.star(1)
    internal = [v for v in range(n) if t.degree(v) >= 2]
    if len(internal) <= 1:
        return TreeShape.star(n)
    if len(internal) == 2:
        u, v = internal
        if t.has_edge(u, v):
            return TreeShape.double_star(t.degree(u) - 1, t.degree(v) - 1)
        return TreeShape.other()
    if len(internal) == 3:
        mids = [
            m
            for m in internal
            if t.degree(m) == 2
            and all(t.has_edge(m, o) for o in internal if o != m)
        ]
        if mids:
            m = mids[0]
            u, v = (o for o in internal if o != m)
            return TreeShape.subdivided_double_star(t.degree(u) - 1, t.degree(v) - 1)
    return TreeShape.other()


@dataclass(frozen=True)
class MinimizerFamily:
    """Expected set of minimum-cost tree shapes at a given n; when
    all_trees is set every n-vertex tree attains the minimum."""

    n: int
    all_trees: bool
    shapes: frozenset


def expected_minimizers(n: int) -> MinimizerFamily:
    """Shapes of the n-vertex trees with minimum cost n + tri_index(n-1)."""
    if n < 4:
        raise ValueError("minimizer classification starts at n = 4")
    if n == 7:
        return MinimizerFamily(7, True, frozenset())
    if not (is_triangular(n - 1) or is_triangular(n - 2)):
        return MinimizerFamily(n, False, frozenset({TreeShape.star(n)}))
    shapes = {TreeShape.star(n)}
    if n - 3 >= 1:
        shapes.add(TreeShape.double_star(1, n - 3))
    if n - 4 >= 1:
        shapes.add(TreeShape.double_star(2, n - 4))
        shapes.add(TreeShape.subdivided_double_star(1, n - 4))
    if n == 11:
        shapes.add(TreeShape.double_star(4, 5))
        shapes.add(TreeShape.subdivided_double_star(4, 4))
    return MinimizerFamily(n, False, frozenset(shapes))


@dataclass(frozen=True)
class CensusRow:
    n: int
    canonical_code: str
    s: int
    is_max: bool
    has_witness: bool
    shape: TreeShape
    is_min: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "canonical_code": self.canonical_code,
            "s": self.s,
            "is_max": self.is_max,
            "has_witness": self.has_witness,
            "shape": self.shape.label(),
            "is_min": self.is_min,
        }


@dataclass
class CensusReport:
    n: int
    rows: list
    max_value: int
    min_value: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def minimizer_shapes(self) -> Set[TreeShape]:
        return {row.shape for row in self.rows if row.is_min}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "tree_count": len(self.rows),
            "max_value": self.max_value,
            "min_value": self.min_value,
            "violations": self.violations,
            "rows": [r.to_json() for r in self.rows],
        }

    def summary(self) -> str:
        mins = sum(1 for r in self.rows if r.is_min)
        maxs = sum(1 for r in self.rows if r.is_max)
        lines = [
            f"n={self.n}: {len(self.rows)} trees, "
            f"min {self.min_value} ({mins} trees), max {self.max_value} ({maxs} trees)"
        ]
        if self.violations:
            lines.append(f"VIOLATIONS: {self.violations}")
        else:
            lines.append("both characterizations verified")
        return "\n".join(lines)


def census(n: int, cross_check_witness: bool = False) -> CensusReport:
    """Evaluate every n-vertex tree and verify both characterizations:
    maximum-cost trees are exactly those with a witness, and minimum-cost
    trees match the expected shape family (for n >= 4)."""
    if n > 16:
        raise ValueError("census supports n <= 16")
    max_value = (3 * n) // 2
    min_value = n + tri_index(n - 1) if n >= 1 else 0
    rows = []
    violations = []
    for tree in enumerate_trees(n):
        s = slow_cost(tree)
        witness = max_witness(tree)
        if cross_check_witness:
            brute = brute_force_witness(tree)
            if (witness is None) != (brute is None):
                violations.append(
                    f"witness search disagrees with brute force on {canonical_code(tree)}"
                )
        row = CensusRow(
            n=n,
            canonical_code=canonical_code(tree),
            s=s,
            is_max=(s == max_value),
            has_witness=witness is not None,
            shape=classify_shape(tree),
            is_min=(s == min_value),
        )
        if witness is not None:
            deg = {v: 0 for v in range(n)}
            for u, v in witness.edges:
                deg[u] += 1
                deg[v] += 1
            if _witness_degrees_ok([deg[v] for v in range(n)], n) is None:
                violations.append(
                    f"reported witness malformed on {row.canonical_code}"
                )
        if row.is_max != row.has_witness:
            violations.append(
                f"max-characterization fails on {row.canonical_code}: "
                f"s={s}, witness={row.has_witness}"
            )
        if s < min_value:
            violations.append(
                f"value below the star bound on {row.canonical_code}: {s}"
            )
        rows.append(row)
    if n >= 4:
        family = expected_minimizers(n)
        min_shapes = {r.shape for r in rows if r.is_min}
        if family.all_trees:
            if not all(r.is_min for r in rows):
                violations.append("expected every tree minimal at n=7")
        elif min_shapes != set(family.shapes):
            violations.append(
                f"minimizer shapes {sorted(s.label() for s in min_shapes)} != "
                f"expected {sorted(s.label() for s in family.shapes)}"
            )
    return CensusReport(n, rows, max_value, min_value, violations)
