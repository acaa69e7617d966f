"""Graph and forest representation, parsing, stems, cuts, and tree enumeration.

Vertices are 0..n-1.  Graphs are immutable after construction and safe to
share.  The edge-list text format is a one-line header "n m" followed by m
lines "u v"; blank lines and lines starting with '#' are ignored.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Graph",
    "Forest",
    "Stem",
    "Cut",
    "GraphError",
    "ParseError",
    "MalformedLine",
    "VertexOutOfRange",
    "DuplicateEdge",
    "SelfLoop",
    "CycleDetected",
    "parse_graph",
    "validate_forest",
    "find_stem",
    "stem_at",
    "cut_edges",
    "enumerate_trees",
    "tree_count",
    "canonical_code",
    "centroid_code",
    "path_graph",
    "star_graph",
    "cycle_graph",
    "complete_graph",
    "double_star",
    "subdivided_double_star",
    "random_forest",
    "random_graph",
    "random_subforest",
]


class GraphError(Exception):
    """Base class for graph construction and validation errors."""


class ParseError(GraphError):
    """Edge-list document rejected; carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedLine(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class CycleDetected(GraphError):
    """Graph is not a forest; carries one witness cycle as a vertex list."""

    def __init__(self, cycle: Sequence[int]):
        super().__init__(f"cycle detected: {list(cycle)}")
        self.cycle = tuple(cycle)


class Graph:
    """Immutable undirected simple graph with sorted adjacency tuples."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: tuple):
        self.n = n
        self.adj = adj
        self.m = sum(len(a) for a in adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        lists: list = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
        return cls(n, tuple(tuple(sorted(a)) for a in lists))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def components(self, live: Optional[Iterable[int]] = None) -> list:
        """Connected components (sorted vertex lists), optionally restricted
        to an induced live set."""
        alive = set(range(self.n)) if live is None else set(live)
        out = []
        while alive:
            root = min(alive)
            comp = [root]
            alive.discard(root)
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y in alive:
                        alive.discard(y)
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def induced(self, vertices: Sequence[int]) -> tuple:
        """Induced subgraph relabeled 0..k-1; returns (graph, old_ids)."""
        old = sorted(vertices)
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u in old
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph.from_edges(len(old), edges), old

    def to_edge_list_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))


class Forest(Graph):
    """A Graph that has been verified acyclic."""

    def __repr__(self):
        return f"Forest(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Stem:
    """A vertex with at least one leaf neighbor and at most one non-leaf
    neighbor; the peel unit of the forest recurrence."""

    v: int
    leaf_neighbors: frozenset

    @property
    def r(self) -> int:
        return len(self.leaf_neighbors)


@dataclass(frozen=True)
class Cut:
    """Vertex bipartition (A, B) with the set of crossing edges."""

    A: frozenset
    B: frozenset
    crossing_edges: tuple


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a Graph.

    Rejects malformed lines, out-of-range endpoints, duplicate edges, and
    self-loops, each with its own error type and the offending line number.
    """
    n = m = None
    header_line = 0
    edges = []
    edge_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise MalformedLine("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise MalformedLine("header fields must be integers", lineno) from None
            if n < 0 or m < 0:
                raise MalformedLine("header fields must be nonnegative", lineno)
            header_line = lineno
            continue
        if len(parts) != 2:
            raise MalformedLine("expected edge 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine("edge endpoints must be integers", lineno) from None
        edges.append((u, v))
        edge_lines.append(lineno)
    if n is None:
        raise MalformedLine("missing header 'n m'", 1)
    if len(edges) != m:
        raise MalformedLine(
            f"header promises {m} edges but document has {len(edges)}", header_line
        )

    seen = set()
    lists: list = [[] for _ in range(n)]
    for (u, v), lineno in zip(edges, edge_lines):
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge ({u},{v})", lineno)
        seen.add(key)
        lists[u].append(v)
        lists[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in lists))


def validate_forest(g: Graph) -> Forest:
    """Return g as a Forest, or raise CycleDetected with a witness cycle."""
    parent = [-2] * g.n
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        stack = [(root, -1)]
        while stack:
            x, p = stack.pop()
            for y in g.adj[x]:
                if y == p:
                    continue
                if parent[y] != -2:
                    # back edge x-y closes a cycle; walk both ends to the root
                    path_x = [x]
                    while path_x[-1] != root:
                        path_x.append(parent[path_x[-1]])
                    path_y = [y]
                    while path_y[-1] != root:
                        path_y.append(parent[path_y[-1]])
                    sy = set(path_y)
                    meet = next(vv for vv in path_x if vv in sy)
                    cyc = path_x[: path_x.index(meet) + 1]
                    cyc += list(reversed(path_y[: path_y.index(meet)]))
                    raise CycleDetected(cyc)
                parent[y] = x
                stack.append((y, x))
    f = Forest(g.n, g.adj)
    return f


def stem_at(g: Graph, v: int) -> Optional[Stem]:
    """Return the Stem at v if v qualifies, else None."""
    leaves = frozenset(w for w in g.adj[v] if len(g.adj[w]) == 1)
    if not leaves:
        return None
    if len(g.adj[v]) - len(leaves) > 1:
        return None
    return Stem(v, leaves)


def find_stem(f: Forest) -> Optional[Stem]:
    """Lowest-id stem of f, or None iff f has no edges."""
    for v in range(f.n):
        s = stem_at(f, v)
        if s is not None:
            return s
    return None


def cut_edges(g: Graph, A: Iterable[int]) -> Cut:
    """Bipartition (A, V-A) together with its crossing edge set."""
    a = frozenset(A)
    for v in a:
        if not 0 <= v < g.n:
            raise GraphError(f"cut side contains vertex {v} outside 0..{g.n - 1}")
    b = frozenset(range(g.n)) - a
    crossing = tuple(
        (u, v) for u, v in g.edges() if (u in a) != (v in a)
    )
    return Cut(a, b, crossing)


# ---------------------------------------------------------------------------
# Canonical encodings and free-tree enumeration
# ---------------------------------------------------------------------------

TREE_ENUM_MAX_N = 18

# number of unlabeled trees on n vertices, n = 1..18
_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159,
                7741, 19320, 48629, 123867]


def tree_count(n: int) -> int:
    if not 1 <= n <= TREE_ENUM_MAX_N:
        raise ValueError(f"tree counts available for 1 <= n <= {TREE_ENUM_MAX_N}")
    return _TREE_COUNTS[n - 1]


def _rooted_code(g: Graph, root: int, banned: int = -1) -> str:
    """Parenthesis encoding of the subtree at root, not crossing `banned`."""
    kids = [w for w in g.adj[root] if w != banned]
    if not kids:
        return "()"
    return "(" + "".join(sorted(_rooted_code(g, w, root) for w in kids)) + ")"


def _centers(g: Graph, comp: Sequence[int]) -> list:
    """Center vertex/vertices of a tree component (peel leaves inward)."""
    if len(comp) == 1:
        return [comp[0]]
    deg = {v: len(g.adj[v]) for v in comp}
    layer = [v for v in comp if deg[v] == 1]
    remaining = len(comp)
    while remaining > 2:
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in g.adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        remaining -= len(layer)
        layer = nxt
    return sorted(layer)


def _centroids(g: Graph, comp: Sequence[int]) -> list:
    """Centroid vertex/vertices (minimizing the largest split subtree)."""
    total = len(comp)
    size = {}
    order = []
    root = comp[0]
    stack = [(root, -1)]
    while stack:
        x, p = stack.pop()
        order.append((x, p))
        for y in g.adj[x]:
            if y != p:
                stack.append((y, x))
    for x, p in reversed(order):
        size[x] = 1 + sum(size[y] for y in g.adj[x] if y != p)
    best, cands = total + 1, []
    for x, p in order:
        heaviest = max(
            [size[y] for y in g.adj[x] if y != p] + [total - size[x]],
            default=0,
        )
        if heaviest < best:
            best, cands = heaviest, [x]
        elif heaviest == best:
            cands.append(x)
    return sorted(cands)


def _component_code(g: Graph, comp: Sequence[int], roots: list) -> str:
    if len(roots) == 1:
        return "V" + _rooted_code(g, roots[0])
    a, b = roots
    return "E" + "".join(sorted((_rooted_code(g, a, b), _rooted_code(g, b, a))))


def canonical_code(f: Forest) -> str:
    """Isomorphism-invariant string for a forest, rooted at tree centers.

    Equal codes iff isomorphic; component codes are sorted so the encoding
    is invariant under component order as well.
    """
    parts = []
    for comp in f.components():
        parts.append(_component_code(f, comp, _centers(f, comp)))
    return "|".join(sorted(parts))


def centroid_code(f: Forest) -> str:
    """Second, independent canonical encoding rooted at tree centroids."""
    parts = []
    for comp in f.components():
        parts.append(_component_code(f, comp, _centroids(f, comp)))
    return "|".join(sorted(parts))


def enumerate_trees(n: int) -> Iterator[Forest]:
    """Yield one representative per isomorphism class of n-vertex trees.

    Built by growing every (n-1)-vertex class by one leaf in all positions
    and deduplicating by canonical code; representatives stream in sorted
    canonical-code order, so the sequence is deterministic.
    """
    if not 1 <= n <= TREE_ENUM_MAX_N:
        raise ValueError(f"enumerate_trees supports 1 <= n <= {TREE_ENUM_MAX_N}")
    level = {canonical_code(Forest(1, ((),))): Forest(1, ((),))}
    for size in range(2, n + 1):
        nxt: dict = {}
        for tree in level.values():
            base_edges = list(tree.edges())
            for v in range(size - 1):
                g = Graph.from_edges(size, base_edges + [(v, size - 1)])
                t = Forest(g.n, g.adj)
                code = canonical_code(t)
                if code not in nxt:
                    nxt[code] = t
        level = nxt
    for code in sorted(level):
        yield level[code]


# ---------------------------------------------------------------------------
# Named constructions and random generators
# ---------------------------------------------------------------------------


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Disjoint union with vertices relabeled consecutively; returns a
    Forest when every part is one."""
    edges = []
    offset = 0
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    out = Graph.from_edges(offset, edges)
    if all(isinstance(g, Forest) for g in parts):
        return Forest(out.n, out.adj)
    return out


def path_graph(n: int) -> Forest:
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    return Forest(g.n, g.adj)


def star_graph(leaves: int) -> Forest:
    """Star with the given number of leaves: n = leaves + 1, center 0."""
    g = Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    return Forest(g.n, g.adj)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def double_star(a: int, b: int) -> Forest:
    """Two adjacent centers (0, 1) with a and b pendant leaves."""
    if a < 1 or b < 1:
        raise ValueError("double star needs a, b >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    g = Graph.from_edges(a + b + 2, edges)
    return Forest(g.n, g.adj)


def subdivided_double_star(a: int, b: int) -> Forest:
    """Double star with the central edge subdivided by vertex 2."""
    if a < 1 or b < 1:
        raise ValueError("subdivided double star needs a, b >= 1")
    edges = [(0, 2), (2, 1)]
    edges += [(0, 3 + i) for i in range(a)]
    edges += [(1, 3 + a + i) for i in range(b)]
    g = Graph.from_edges(a + b + 3, edges)
    return Forest(g.n, g.adj)


def random_forest(n: int, rng: random.Random, fresh_prob: float = 0.08) -> Forest:
    """Random labeled forest: each vertex either starts a new component or
    attaches to a uniformly random earlier vertex; labels then shuffled."""
    relabel = list(range(n))
    rng.shuffle(relabel)
    edges = []
    for i in range(1, n):
        if rng.random() < fresh_prob:
            continue
        j = rng.randrange(i)
        edges.append((relabel[i], relabel[j]))
    g = Graph.from_edges(n, edges)
    return Forest(g.n, g.adj)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_subforest(n: int, rng: random.Random) -> Forest:
    """Random forest biased toward varied component shapes (used in tests)."""
    kind = rng.random()
    if kind < 0.2:
        return path_graph(n)
    if kind < 0.35 and n >= 2:
        return star_graph(n - 1)
    return random_forest(n, rng, fresh_prob=rng.uniform(0.0, 0.3))
