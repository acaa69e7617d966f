"""Exact integer arithmetic for triangular numbers.

Every cost formula in this library is built from two quantities: the
triangular numbers T(k) = k(k+1)/2 and, for a budget r, the index of the
largest triangular number that fits below it.  All functions here are pure
integer computations; no floating point is involved anywhere (float sqrt is
wrong near perfect squares, which is exactly where these functions are
evaluated most often).
"""

from __future__ import annotations

from math import isqrt

__all__ = ["triangular", "tri_index", "is_triangular"]


def triangular(k: int) -> int:
    """Return the k-th triangular number k(k+1)/2."""
    if k < 0:
        raise ValueError(f"triangular index must be nonnegative, got {k}")
    return k * (k + 1) // 2


def tri_index(r: int) -> int:
    """Return the largest k with triangular(k) <= r.

    Computed by an exact integer square root (isqrt is integer Newton), so
    the result is correct for every nonnegative r.
    """
    if r < 0:
        raise ValueError(f"tri_index argument must be nonnegative, got {r}")
    return (isqrt(8 * r + 1) - 1) // 2


def is_triangular(x: int) -> bool:
    """True iff x is a triangular number."""
    if x < 0:
        raise ValueError(f"is_triangular argument must be nonnegative, got {x}")
    return triangular(tri_index(x)) == x
