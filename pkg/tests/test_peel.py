"""Linear-time forest evaluation and peel certificates."""

import random

import numpy as np

from slowcolor.graphs import (
    Forest,
    Graph,
    disjoint_union,
    path_graph,
    random_forest,
    star_graph,
    validate_forest,
)
from slowcolor.numbers import is_triangular, tri_index
from slowcolor.peel import slow_cost, slow_cost_arrays, slow_cost_trace


def test_path_values_small():
    for n in range(1, 60):
        assert slow_cost(path_graph(n)) == (3 * n) // 2, n


def test_star_values_small():
    for n in range(2, 60):
        assert slow_cost(star_graph(n - 1)) == n + tri_index(n - 1), n


def test_spider_example():
    # one stem with four leaves hanging next to an edge: 7 vertices, cost 10
    edges = [(0, 1)] + [(1, 2 + i) for i in range(4)] + [(0, 6)]
    f = validate_forest(Graph.from_edges(7, edges))
    assert slow_cost(f) == 10


def test_null_and_edgeless():
    assert slow_cost(Forest(0, ())) == 0
    assert slow_cost(validate_forest(Graph.from_edges(3, []))) == 3


def test_trace_edgeless():
    tr = slow_cost_trace(validate_forest(Graph.from_edges(3, [])))
    assert tr.steps == () and tr.residual_isolated == 3 and tr.total == 3


def test_trace_small_star():
    tr = slow_cost_trace(star_graph(2))
    assert len(tr.steps) == 1
    (step,) = tr.steps
    assert step.r == 2 and step.triangular_case and step.cost_added == 3
    assert step.deleted == frozenset({1, 2})
    assert tr.residual_isolated == 1 and tr.total == 4


def test_trace_p4():
    tr = slow_cost_trace(path_graph(4))
    assert tr.total == 6
    assert [s.cost_added for s in tr.steps] == [3, 3]


def _replay_trace(f: Forest, trace) -> int:
    """Re-derive the total from the trace, checking every step's stem
    validity in the residual forest."""
    live = set(range(f.n))
    total = 0
    for step in trace.steps:
        assert step.deleted <= live
        nbrs = [w for w in f.adj[step.stem] if w in live]
        leaves = {
            w for w in nbrs if sum(1 for x in f.adj[w] if x in live) == 1
        }
        others = set(nbrs) - leaves
        assert leaves, "stem lost its leaf neighbors"
        assert len(others) <= 1, "stem has too many non-leaf neighbors"
        assert step.r == len(leaves)
        tri = is_triangular(step.r + 1)
        assert tri == step.triangular_case
        expected_deleted = leaves | (set() if tri else {step.stem})
        assert step.deleted == frozenset(expected_deleted)
        assert step.cost_added == step.r + tri_index(step.r) + (0 if tri else 1)
        live -= step.deleted
        total += step.cost_added
    # residual must be edgeless
    for v in live:
        assert not any(w in live for w in f.adj[v])
    assert trace.residual_isolated == len(live)
    return total + len(live)


def test_trace_replays_on_random_forests():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(0, 40)
        f = random_forest(n, rng) if n else Forest(0, ())
        tr = slow_cost_trace(f)
        assert tr.total == slow_cost(f)
        assert _replay_trace(f, tr) == tr.total
        # deleted sets pairwise disjoint, total identity
        seen = set()
        for s in tr.steps:
            assert not (s.deleted & seen)
            seen |= s.deleted
        assert tr.total == tr.residual_isolated + sum(s.cost_added for s in tr.steps)


def test_additivity_over_components():
    rng = random.Random(13)
    for _ in range(40):
        f1 = random_forest(rng.randint(1, 25), rng)
        f2 = random_forest(rng.randint(1, 25), rng)
        assert slow_cost(disjoint_union([f1, f2])) == slow_cost(f1) + slow_cost(f2)


def test_sandwich_bounds():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 300)
        f = random_forest(n, rng)
        # connect the forest into one tree to exercise the tree bounds
        comps = f.components()
        extra = [(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
        t = validate_forest(Graph.from_edges(n, list(f.edges()) + extra))
        s = slow_cost(t)
        assert n + tri_index(n - 1) <= s <= (3 * n) // 2, n


def test_trace_serialization():
    tr = slow_cost_trace(path_graph(5))
    j = tr.to_json()
    assert j["total"] == tr.total == 7
    assert "residual isolated" in tr.to_text()


def test_array_evaluator_matches():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 80)
        f = random_forest(n, rng)
        deg = np.array([len(a) for a in f.adj], dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.array(
            [w for v in range(n) for w in f.adj[v]], dtype=np.int32
        )
        assert slow_cost_arrays(indptr, indices) == slow_cost(f)


def test_linear_touch_counts():
    from slowcolor.peel import random_forest_arrays

    ratios = []
    for n in (50_000, 100_000, 200_000):
        indptr, indices = random_forest_arrays(n, seed=3)
        _, touches = slow_cost_arrays(indptr, indices, count_touches=True)
        ratios.append(touches / n)
    assert max(ratios) <= 1.5 * min(ratios)
    assert max(ratios) < 12
