"""Internal helpers over live vertex subsets of a fixed base graph."""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from .graphs import Graph


def live_components(g: Graph, live: Iterable[int]) -> list:
    """Connected components of the induced live subgraph, as frozensets,
    ordered by minimum vertex."""
    out = []
    rem = set(live)
    while rem:
        root = min(rem)
        comp = {root}
        rem.discard(root)
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in rem:
                    rem.discard(y)
                    comp.add(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def live_degree(g: Graph, live, v: int) -> int:
    return sum(1 for w in g.adj[v] if w in live)


def find_live_stem(g: Graph, comp) -> Optional[Tuple[int, frozenset, Optional[int]]]:
    """Lowest-id stem within a live component.

    Returns (v, leaf_set, outside) where outside is v's unique non-leaf
    neighbor, or None when v is a star center; returns None when the
    component has no edges.
    """
    for v in sorted(comp):
        nbrs = [w for w in g.adj[v] if w in comp]
        if not nbrs:
            continue
        leaves = [w for w in nbrs if live_degree(g, comp, w) == 1]
        if not leaves:
            continue
        others = [w for w in nbrs if live_degree(g, comp, w) != 1]
        if len(others) <= 1:
            return v, frozenset(leaves), (others[0] if others else None)
    return None


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(not (vs & set(g.adj[v])) for v in vs)
