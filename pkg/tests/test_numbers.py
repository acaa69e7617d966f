"""Triangular-number arithmetic."""

import pytest

from slowcolor.numbers import is_triangular, tri_index, triangular


def tri_index_by_search(r: int) -> int:
    """Binary-search oracle, independent of the isqrt implementation."""
    lo, hi = 0, 1
    while triangular(hi) <= r:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if triangular(mid) <= r:
            lo = mid
        else:
            hi = mid - 1
    return lo


def test_triangular_values():
    assert triangular(0) == 0
    assert triangular(3) == 6
    assert triangular(4) == 10
    assert [triangular(k) for k in range(8)] == [0, 1, 3, 6, 10, 15, 21, 28]


def test_tri_index_values():
    assert tri_index(0) == 0
    assert tri_index(6) == 3
    assert tri_index(9) == 3
    assert tri_index(10) == 4


def test_is_triangular():
    assert is_triangular(0)
    assert is_triangular(6)
    assert not is_triangular(7)
    tris = {triangular(k) for k in range(100)}
    for x in range(triangular(99)):
        assert is_triangular(x) == (x in tris)


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        triangular(-1)
    with pytest.raises(ValueError):
        tri_index(-1)
    with pytest.raises(ValueError):
        is_triangular(-2)


def test_bracketing_invariant():
    # t_{u(r)} <= r < t_{u(r)+1}, checked densely plus around big squares
    for r in list(range(0, 50_000)) + [10**6, 10**9, 10**12, 10**18]:
        u = tri_index(r)
        assert triangular(u) <= r < triangular(u + 1), r


def test_matches_binary_search_oracle():
    for r in list(range(0, 5_000)) + [10**6 - 1, 10**6, 10**9 + 7]:
        assert tri_index(r) == tri_index_by_search(r), r


def test_index_shift_identity_sampled():
    # u(r - u(r)) drops by one exactly outside the triangular-successor case
    for r in range(1, 200_000):
        u = tri_index(r)
        if is_triangular(r + 1):
            assert tri_index(r - u) == u, r
        else:
            assert tri_index(r - u) == u - 1, r


def test_monotone_and_fixed_points():
    prev = 0
    for r in range(0, 20_000):
        u = tri_index(r)
        assert u >= prev
        prev = u
    for k in range(0, 1_401):
        assert tri_index(triangular(k)) == k
