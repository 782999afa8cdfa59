"""Adjacency, distance and eccentricity matrices, and quotient matrices.

Matrices are plain read-only ``float64`` numpy arrays.  Every entry is built
from exact integer distances, so no tolerance enters before the eigensolver.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DisconnectedGraphError, NotATreeError
from .graphs import Graph, Tree, complement, distances, is_connected

__all__ = [
    "Partition",
    "QuotientResult",
    "EccComparison",
    "adjacency_matrix",
    "distance_matrix",
    "eccentricity_matrix",
    "complement_ecc_vs_2a",
    "quotient",
    "support_is_connected",
    "t3_partition",
    "t4_partition",
    "format_matrix",
    "matrix_to_json",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return _frozen(a)


def distance_matrix(g: Graph) -> np.ndarray:
    return _frozen(distances(g).astype(float))


def eccentricity_matrix(g: Graph) -> np.ndarray:
    """Keep ``d(u, v)`` where it equals ``min(e(u), e(v))``; zero elsewhere."""
    d = distances(g)
    ecc = d.max(axis=1)
    keep = d == np.minimum.outer(ecc, ecc)
    np.fill_diagonal(keep, False)
    return _frozen(np.where(keep, d, 0).astype(float))


def support_is_connected(m: np.ndarray) -> bool:
    """Irreducibility test for a symmetric nonnegative matrix: its nonzero pattern is connected."""
    nz = m != 0
    rows = tuple(sum(1 << int(j) for j in np.flatnonzero(nz[i]) if j != i) for i in range(len(m)))
    return is_connected(Graph(len(m), rows))


@dataclass(frozen=True)
class EccComparison:
    equal: bool
    exceeding_entries: tuple[tuple[int, int, float, float], ...]  # (u, v, E(T^c)_uv, 2A(T)_uv), u < v
    dominates: bool


def complement_ecc_vs_2a(t: Tree) -> EccComparison:
    """Compare E(T^c) with 2A(T) entrywise."""
    if t.n < 4:
        raise NotATreeError(f"need a tree on n >= 4 vertices, got n={t.n}")
    tc = complement(t)
    if not is_connected(tc):
        raise DisconnectedGraphError("the complement of a star is disconnected")
    e = eccentricity_matrix(tc)
    two_a = 2 * adjacency_matrix(t)
    exceed = tuple(
        (int(u), int(v), float(e[u, v]), float(two_a[u, v]))
        for u, v in zip(*np.nonzero(e > two_a))
        if u < v
    )
    return EccComparison(
        equal=bool(np.array_equal(e, two_a)),
        exceeding_entries=exceed,
        dominates=bool(np.all(e >= two_a)),
    )


# ---------------------------------------------------------------- quotients


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(tuple(b) for b in blocks))

    def validate(self, n: int) -> None:
        seen = [v for b in self.blocks for v in b]
        if any(len(b) == 0 for b in self.blocks):
            raise ValueError("partition blocks must be nonempty")
        if sorted(seen) != list(range(n)):
            raise ValueError(f"blocks do not partition 0..{n - 1}")


@dataclass(frozen=True)
class QuotientResult:
    q: np.ndarray
    equitable: bool


def quotient(m: np.ndarray, p: Partition) -> QuotientResult:
    """Quotient matrix of block average row sums, with an exact equitability flag."""
    n = len(m)
    p.validate(n)
    integral = bool(np.all(m == np.round(m)))
    k = len(p.blocks)
    q = np.zeros((k, k))
    equitable = True
    for i, bi in enumerate(p.blocks):
        for j, bj in enumerate(p.blocks):
            sums = m[np.ix_(bi, bj)].sum(axis=1)
            if integral:
                exact = [int(round(s)) for s in sums]
                q[i, j] = float(Fraction(sum(exact), len(bi)))
                equitable &= len(set(exact)) == 1
            else:
                q[i, j] = sums.mean()
                equitable &= bool(np.all(sums == sums[0]))
    return QuotientResult(q=_frozen(q), equitable=equitable)


def t3_partition(n: int, a: int, b: int) -> Partition:
    """{v0 + pendants at v1}, {v1}, {v2}, {v3 + pendants at v2} in build_t3 labels."""
    u_block = [0] + list(range(4, 4 + a))
    w_block = [3] + list(range(4 + a, 4 + a + b))
    return Partition.of([u_block, [1], [2], w_block])


def t4_partition(n: int) -> Partition:
    """{v0}, {v1}, {v2}, {v3}, {v4 + pendants at v3} in build_dnd(n, 4, 0, n-5) labels."""
    return Partition.of([[0], [1], [2], [3], [4] + list(range(5, n))])


# ---------------------------------------------------------------- text output


def format_matrix(m: np.ndarray, precision: int = 10) -> str:
    """Row-major text, one row per line; integral entries are printed as integers."""
    lines = []
    for row in m:
        cells = [str(int(x)) if float(x).is_integer() else f"{x:.{precision}g}" for x in row]
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


def matrix_to_json(m: np.ndarray) -> str:
    return json.dumps([[int(x) if float(x).is_integer() else float(x) for x in row] for row in m])
