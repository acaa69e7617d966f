"""Linear-time sum-color cost of a forest via stem peeling.

The evaluator repeatedly takes the lowest-id stem v with leaf set R, r = |R|:
if r+1 is not triangular it deletes R and v and adds r + 1 + tri_index(r) to
the cost, otherwise it deletes only R and adds r + tri_index(r); when no edge
remains, each surviving vertex adds 1.  Incremental degree and leaf-neighbor
counters plus a lazy candidate heap make the whole peel run in near-linear
time (the heap contributes the only log factor); adjacency lists are
compacted lazily so total vertex touches stay O(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Callable, Optional

from .graphs import Forest
from .numbers import is_triangular, tri_index

__all__ = [
    "PeelStep",
    "PeelTrace",
    "slow_cost",
    "slow_cost_trace",
    "slow_cost_arrays",
    "random_forest_arrays",
]


@dataclass(frozen=True)
class PeelStep:
    """One stem deletion: the stem, its leaf count, which recurrence case
    fired, the vertices removed, and the cost charged."""

    stem: int
    r: int
    triangular_case: bool
    deleted: frozenset
    cost_added: int


@dataclass(frozen=True)
class PeelTrace:
    """Certificate for a forest evaluation: replaying the steps and adding
    one per residual isolated vertex reproduces the total."""

    steps: tuple
    residual_isolated: int
    total: int

    def to_text(self) -> str:
        lines = []
        for i, s in enumerate(self.steps, start=1):
            case = "triangular" if s.triangular_case else "non-triangular"
            del_s = " ".join(map(str, sorted(s.deleted)))
            lines.append(
                f"{i} | stem {s.stem} r={s.r} {case} | delete {del_s} | +{s.cost_added}"
            )
        lines.append(f"residual isolated: {self.residual_isolated}")
        lines.append(f"total: {self.total}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "steps": [
                {
                    "stem": s.stem,
                    "r": s.r,
                    "triangular_case": s.triangular_case,
                    "deleted": sorted(s.deleted),
                    "cost_added": s.cost_added,
                }
                for s in self.steps
            ],
            "residual_isolated": self.residual_isolated,
            "total": self.total,
        }


class _Peeler:
    """Shared peel engine over any adjacency accessor.

    `touches` counts adjacency traversals and counter updates, used by the
    linear-work tests.
    """

    def __init__(
        self,
        n: int,
        neighbors_of: Callable,
        degree: list,
        leaf_nbrs: list,
        seeds: list,
    ):
        self.n = n
        self.neighbors_of = neighbors_of
        self.degree = degree
        self.leaf_nbrs = leaf_nbrs
        self.alive = bytearray([1]) * n if n else bytearray()
        self.compacted: list = [None] * n
        self.heap = seeds
        heapify(self.heap)
        self.touches = 0

    def live_neighbors(self, v: int) -> list:
        lst = self.compacted[v]
        if lst is None:
            lst = self.neighbors_of(v)
        self.touches += len(lst) + 1
        alive = self.alive
        out = [w for w in lst if alive[w]]
        self.compacted[v] = out
        return out

    def is_stem(self, v: int) -> bool:
        lb = self.leaf_nbrs[v]
        return lb >= 1 and self.degree[v] - lb <= 1

    def run(self, record: Optional[list]) -> int:
        degree = self.degree
        leaf_nbrs = self.leaf_nbrs
        alive = self.alive
        heap = self.heap
        total = 0
        while heap:
            v = heappop(heap)
            if not alive[v] or not self.is_stem(v):
                continue
            nbrs = self.live_neighbors(v)
            R = [w for w in nbrs if degree[w] == 1]
            r = len(R)
            tri = is_triangular(r + 1)
            cost = r + tri_index(r) + (0 if tri else 1)
            total += cost
            deleted = R if tri else R + [v]
            for d in deleted:
                alive[d] = 0
            if record is not None:
                record.append(
                    PeelStep(v, r, tri, frozenset(deleted), cost)
                )
            for d in deleted:
                d_was_leaf = degree[d] == 1
                for w in self.live_neighbors(d):
                    self.touches += 1
                    degree[w] -= 1
                    if d_was_leaf:
                        leaf_nbrs[w] -= 1
                    if degree[w] == 1:
                        rest = self.live_neighbors(w)
                        if rest:
                            x = rest[0]
                            leaf_nbrs[x] += 1
                            heappush(heap, x)
                    heappush(heap, w)
        residual = sum(self.alive)
        total += residual
        return total


def _peeler_for_forest(f: Forest) -> _Peeler:
    degree = [len(a) for a in f.adj]
    leaf_nbrs = [0] * f.n
    for v in range(f.n):
        leaf_nbrs[v] = sum(1 for w in f.adj[v] if degree[w] == 1)
    seeds = [
        v
        for v in range(f.n)
        if leaf_nbrs[v] >= 1 and degree[v] - leaf_nbrs[v] <= 1
    ]
    return _Peeler(f.n, lambda v: f.adj[v], degree, leaf_nbrs, seeds)


def slow_cost(f: Forest) -> int:
    """Sum-color cost of a forest (score of the slow-coloring game under
    optimal play by both sides)."""
    return _peeler_for_forest(f).run(record=None)


def slow_cost_trace(f: Forest) -> PeelTrace:
    """Evaluate the forest and return the peel certificate."""
    steps: list = []
    peeler = _peeler_for_forest(f)
    total = peeler.run(record=steps)
    residual = total - sum(s.cost_added for s in steps)
    return PeelTrace(tuple(steps), residual, total)


def slow_cost_arrays(indptr, indices, count_touches: bool = False):
    """Sum-color cost from a CSR adjacency (numpy arrays); used for
    large-scale benchmarks where per-vertex Python lists are too heavy.

    Returns the cost, or (cost, touches) when count_touches is set.
    """
    import numpy as np

    n = len(indptr) - 1
    deg_arr = np.diff(indptr)
    leaf = (deg_arr == 1).astype(np.int64)
    leaf_nbrs_arr = np.zeros(n, dtype=np.int64)
    np.add.at(leaf_nbrs_arr, indices, np.repeat(leaf, deg_arr))
    # leaf_nbrs[v] = sum over neighbors w of leaf[w]; computed by scattering
    # each vertex's leaf flag onto all of its neighbors.
    seeds_mask = (leaf_nbrs_arr >= 1) & ((deg_arr - leaf_nbrs_arr) <= 1)
    seeds = np.nonzero(seeds_mask)[0].tolist()
    degree = deg_arr.tolist()
    leaf_nbrs = leaf_nbrs_arr.tolist()

    def neighbors_of(v: int) -> list:
        return indices[indptr[v]: indptr[v + 1]].tolist()

    peeler = _Peeler(n, neighbors_of, degree, leaf_nbrs, seeds)
    total = peeler.run(record=None)
    if count_touches:
        return total, peeler.touches
    return total


def random_forest_arrays(n: int, seed: int, fresh_prob: float = 0.05):
    """Random forest as CSR arrays, built vectorized for large n."""
    import numpy as np

    rng = np.random.default_rng(seed)
    child = np.arange(1, n, dtype=np.int64)
    parent = (rng.random(n - 1) * child).astype(np.int64)
    keep = rng.random(n - 1) >= fresh_prob
    u = child[keep]
    v = parent[keep]
    deg = np.zeros(n, dtype=np.int64)
    np.add.at(deg, u, 1)
    np.add.at(deg, v, 1)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indices = np.empty(indptr[-1], dtype=np.int32)
    cursor = indptr[:-1].copy()
    # place both directions; np.add.at-free fill using argsort of endpoints
    heads = np.concatenate([u, v])
    tails = np.concatenate([v, u])
    order = np.argsort(heads, kind="stable")
    indices[:] = tails[order]
    del cursor
    return indptr, indices
