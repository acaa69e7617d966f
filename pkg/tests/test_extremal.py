"""Extremal-tree characterizations: witnesses, shapes, minimizers, census."""

import pytest

from slowcolor.extremal import (
    NotConnected,
    TreeShape,
    brute_force_witness,
    census,
    classify_shape,
    expected_minimizers,
    max_witness,
)
from slowcolor.graphs import (
    Graph,
    disjoint_union,
    double_star,
    enumerate_trees,
    path_graph,
    star_graph,
    subdivided_double_star,
    validate_forest,
)
from slowcolor.numbers import tri_index
from slowcolor.peel import slow_cost


def _check_witness(f, w):
    deg = [0] * f.n
    for u, v in w.edges:
        assert f.has_edge(u, v)
        deg[u] += 1
        deg[v] += 1
    exceptional = [v for v in range(f.n) if deg[v] not in (1, 3)]
    if f.n % 2 == 0:
        assert exceptional == []
        assert w.exception_vertex is None
    else:
        assert len(exceptional) == 1
        assert deg[exceptional[0]] in (0, 6)
        assert w.exception_vertex == exceptional[0]


def test_witness_examples():
    w = max_witness(path_graph(2))
    assert w is not None and w.edges == frozenset({(0, 1)})
    w = max_witness(star_graph(4))  # n = 5 odd
    assert w is not None
    _check_witness(star_graph(4), w)
    assert len(w.edges) == 3
    w = max_witness(path_graph(3))
    assert w is not None
    _check_witness(path_graph(3), w)
    assert slow_cost(path_graph(3)) == 4 == (3 * 3) // 2


def test_witness_matches_brute_force():
    for n in range(1, 9):
        for t in enumerate_trees(n):
            smart = max_witness(t)
            brute = brute_force_witness(t)
            assert (smart is None) == (brute is None), list(t.edges())
            if smart is not None:
                _check_witness(t, smart)


def test_witness_on_forests_with_shared_budget():
    # two K_2 components: even total, witness = both edges
    f = disjoint_union([path_graph(2), path_graph(2)])
    w = max_witness(f)
    assert w is not None and len(w.edges) == 2
    # K_2 + K_1: odd total, the isolated vertex is the exception
    f = disjoint_union([path_graph(2), validate_forest(Graph.from_edges(1, []))])
    w = max_witness(f)
    assert w is not None and w.exception_vertex == 2
    # two odd components can never both carry the single exception
    f = disjoint_union([path_graph(3), path_graph(3)])
    assert max_witness(f) is None


def test_biconditional_small():
    for n in range(1, 11):
        for t in enumerate_trees(n):
            tight = slow_cost(t) == (3 * n) // 2
            assert (max_witness(t) is not None) == tight, list(t.edges())


def test_classify_shapes():
    assert classify_shape(star_graph(7)) == TreeShape.star(8)
    assert classify_shape(path_graph(1)) == TreeShape.star(1)
    assert classify_shape(path_graph(2)) == TreeShape.star(2)
    assert classify_shape(path_graph(3)) == TreeShape.star(3)
    assert classify_shape(double_star(2, 4)) == TreeShape.double_star(2, 4)
    assert classify_shape(double_star(4, 2)) == TreeShape.double_star(2, 4)
    assert classify_shape(path_graph(4)) == TreeShape.double_star(1, 1)
    assert classify_shape(path_graph(5)) == TreeShape.subdivided_double_star(1, 1)
    assert classify_shape(subdivided_double_star(1, 4)) == TreeShape.subdivided_double_star(1, 4)
    assert classify_shape(path_graph(6)).kind == "other"
    with pytest.raises(NotConnected):
        classify_shape(disjoint_union([path_graph(2), path_graph(2)]))


def test_expected_minimizers():
    fam = expected_minimizers(9)
    assert not fam.all_trees and fam.shapes == frozenset({TreeShape.star(9)})
    fam = expected_minimizers(8)
    assert len(fam.shapes) == 4
    fam = expected_minimizers(11)
    assert len(fam.shapes) == 6
    assert TreeShape.double_star(4, 5) in fam.shapes
    assert TreeShape.subdivided_double_star(4, 4) in fam.shapes
    assert expected_minimizers(7).all_trees
    fam = expected_minimizers(12)
    assert len(fam.shapes) == 4
    with pytest.raises(ValueError):
        expected_minimizers(3)


def test_minimizer_shapes_cover_small_n():
    # n=4 and n=5: every tree attains the minimum and is in the family
    for n in (4, 5):
        fam = expected_minimizers(n)
        shapes = {classify_shape(t) for t in enumerate_trees(n)}
        assert shapes == set(fam.shapes), n


def test_census_small():
    rep = census(7)
    assert rep.ok
    assert all(r.is_min and r.s == 10 for r in rep.rows)
    rep = census(8)
    assert rep.ok
    assert sum(1 for r in rep.rows if r.is_min) == 4
    rep = census(5)
    assert rep.ok


def test_census_n4_degenerate():
    rep = census(4)
    assert rep.ok
    assert all(r.is_min and r.is_max and r.has_witness for r in rep.rows)
    assert rep.min_value == rep.max_value == 6


def test_census_rows_schema():
    rep = census(6)
    row = rep.rows[0].to_json()
    assert set(row) == {
        "n",
        "canonical_code",
        "s",
        "is_max",
        "has_witness",
        "shape",
        "is_min",
    }
    j = rep.to_json()
    assert j["tree_count"] == 6
    assert "min" in rep.summary()


def test_census_max_matches_witness_count():
    rep = census(10, cross_check_witness=True)
    assert rep.ok
    maxima = [r for r in rep.rows if r.is_max]
    assert maxima and all(r.has_witness for r in maxima)


def test_concavity_inequalities():
    """Pairwise index sums dominate the extreme split, strictly when no
    near-boundary triangular number interferes."""
    from slowcolor.numbers import is_triangular

    for m in range(6, 2001):
        base = tri_index(1) + tri_index(m - 1)
        strict = not any(is_triangular(m - j) for j in range(1, 5))
        for r in range(3, m // 2 + 1):
            s = tri_index(r) + tri_index(m - r)
            assert s >= base, (m, r)
            if strict:
                assert s >= base + 1, (m, r)
