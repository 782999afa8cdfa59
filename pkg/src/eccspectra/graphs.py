"""Exact graph primitives: tree families, complements, BFS distances, canonical codes.

Adjacency is held as one integer bitmask per vertex (bit ``v`` of ``rows[u]``
set iff ``u ~ v``).  Python ints are unbounded, so nothing here limits ``n``;
the exhaustive tooling just never goes beyond a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedGraphError,
    InconsistentParametersError,
    InvalidOrderError,
    NotATreeError,
)

__all__ = [
    "Graph",
    "Tree",
    "EccInfo",
    "path",
    "star",
    "build_t3",
    "build_dnd",
    "tree_from_pruefer",
    "complement",
    "distances",
    "ecc_info",
    "is_connected",
    "canonical_code",
    "relabel",
    "format_edge_list",
    "parse_edge_list",
    "parse_pruefer",
]


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidOrderError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex >= n")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]):
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]


class Tree(Graph):
    """A connected graph with exactly ``n - 1`` edges."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.edge_count != self.n - 1 or not is_connected(self):
            raise NotATreeError(
                f"not a tree: n={self.n}, edges={self.edge_count}, connected={is_connected(self)}"
            )


@dataclass(frozen=True)
class EccInfo:
    ecc: tuple[int, ...]
    diameter: int

    @property
    def radius(self) -> int:
        return min(self.ecc)


# ---------------------------------------------------------------- families


def path(n: int) -> Tree:
    """The path ``P_n`` with edges ``(i, i+1)``."""
    if n < 1:
        raise InvalidOrderError(f"path needs n >= 1, got {n}")
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """The star ``K_{1,n-1}`` centred at vertex 0."""
    if n < 2:
        raise InvalidOrderError(f"star needs n >= 2, got {n}")
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


def _caterpillar(n: int, d: int, a: int, b: int) -> Tree:
    # spine v0..vd, then a pendants on v1, then b pendants on v_{d-1}
    edges = [(i, i + 1) for i in range(d)]
    nxt = d + 1
    for hub, count in ((1, a), (d - 1, b)):
        for _ in range(count):
            edges.append((hub, nxt))
            nxt += 1
    return Tree.from_edges(n, edges)


def build_t3(n: int, a: int, b: int) -> Tree:
    """Diameter-3 double broom: ``P4 = v0v1v2v3`` with ``a`` pendants at v1, ``b`` at v2."""
    if n < 4:
        raise InvalidOrderError(f"diameter-3 tree needs n >= 4, got {n}")
    if a < 0 or b < a or a + b != n - 4:
        raise InconsistentParametersError(
            f"need b >= a >= 0 and a + b = n - 4; got n={n}, a={a}, b={b}"
        )
    return _caterpillar(n, 3, a, b)


def build_dnd(n: int, d: int, a: int, b: int) -> Tree:
    """Path ``v0..vd`` with ``a`` pendants at v1 and ``b`` at v_{d-1}; diameter ``d >= 4``."""
    if d < 4:
        raise InconsistentParametersError(f"build_dnd needs d >= 4 (use build_t3 for d = 3), got d={d}")
    if a < 0 or b < a or a + b != n - d - 1:
        raise InconsistentParametersError(
            f"need b >= a >= 0 and a + b = n - d - 1; got n={n}, d={d}, a={a}, b={b}"
        )
    return _caterpillar(n, d, a, b)


def tree_from_pruefer(seq: Sequence[int], n: int | None = None) -> Tree:
    """Decode a Prüfer sequence into its labeled tree on ``len(seq) + 2`` vertices."""
    seq = list(seq)
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise InvalidOrderError(f"Prüfer sequence of length {len(seq)} does not fit n={n}")
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"Prüfer entry {x} outside 0..{n - 1}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Tree.from_edges(n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``; keeps the Tree type."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return type(g).from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# ---------------------------------------------------------------- structure


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows)))


def _bfs_levels(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    level = 0
    while frontier:
        level += 1
        reach = 0
        for v in _bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        seen |= frontier
        for v in _bits(frontier):
            dist[v] = level
    return dist


def is_connected(g: Graph) -> bool:
    return -1 not in _bfs_levels(g, 0)


def distances(g: Graph) -> np.ndarray:
    """All-pairs shortest-path lengths (one BFS per vertex), as a read-only int array."""
    out = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs_levels(g, s)
        if -1 in row:
            raise DisconnectedGraphError("distances are undefined on a disconnected graph")
        out[s] = row
    out.setflags(write=False)
    return out


def ecc_info(g: Graph) -> EccInfo:
    d = distances(g)
    ecc = tuple(int(x) for x in d.max(axis=1))
    return EccInfo(ecc=ecc, diameter=max(ecc))


# ---------------------------------------------------------------- canonical form


def _centers(t: Graph) -> list[int]:
    degree = list(t.degrees())
    remaining = t.n
    layer = [v for v in range(t.n) if degree[v] <= 1]
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in t.neighbors(leaf):
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int, parent: int) -> str:
    # iterative post-order so deep paths do not hit the recursion limit
    codes: dict[int, str] = {}
    stack = [(root, parent, False)]
    while stack:
        v, p, done = stack.pop()
        if done:
            kids = sorted(codes[w] for w in t.neighbors(v) if w != p)
            codes[v] = "(" + "".join(kids) + ")"
        else:
            stack.append((v, p, True))
            stack.extend((w, v, False) for w in t.neighbors(v) if w != p)
    return codes[root]


def canonical_code(t: Graph) -> str:
    """AHU code of ``t`` rooted at its center (prefix ``c``) or bicenter edge (prefix ``b``).

    Two trees get the same code iff they are isomorphic; plain string comparison
    gives the total order used for deterministic output.
    """
    if t.edge_count != t.n - 1 or not is_connected(t):
        raise NotATreeError("canonical_code is only defined for trees")
    centers = _centers(t)
    if len(centers) == 1:
        return "c" + _rooted_code(t, centers[0], -1)
    u, v = centers
    return "b" + "".join(sorted((_rooted_code(t, u, v), _rooted_code(t, v, u))))


# ---------------------------------------------------------------- text formats


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (blank lines and ``#`` comments ignored).

    Returns a :class:`Tree` when the edges form one, otherwise a :class:`Graph`.
    """
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=0)
    g = Graph.from_edges(n, edges)
    if g.edge_count == n - 1 and is_connected(g):
        return Tree(g.n, g.rows)
    return g


def parse_pruefer(text: str) -> list[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []
