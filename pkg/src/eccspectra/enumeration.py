"""Free-tree enumeration.

The generator walks canonical level sequences of center-rooted trees in the
manner of Wright, Richmond, Odlyzko and McKay: Beyer-Hedetniemi successor
steps, plus a jump over whole runs of sequences whose first subtree is too
tall or too large to be rooted at a center.  A level sequence lists vertex
depths in preorder with the root at depth 0.

``pruefer_free_trees`` is the slow labeled-tree route kept as an oracle.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterator, Sequence

from .errors import InvalidOrderError
from .graphs import Tree, canonical_code, complement, is_connected, path, star, tree_from_pruefer

__all__ = [
    "MAX_ORDER",
    "enumerate_free_trees",
    "enumerate_with_connected_complement",
    "level_sequences",
    "tree_from_levels",
    "pruefer_free_trees",
]

MAX_ORDER = 64


def _successor(levels: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor; ``p`` overrides the position that gets decremented."""
    if p is None:
        p = len(levels) - 1
        while p > 0 and levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = levels[:p]
    shift = p - q
    for i in range(p, len(levels)):
        out.append(out[i - shift])
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """First subtree of the root (re-rooted) and the remainder (root kept)."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    first = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return first, rest


def _centered(first: list[int], rest: list[int]) -> bool:
    h1, h2 = max(first), max(rest)
    if h1 != h2:
        return h1 < h2
    if len(first) != len(rest):
        return len(first) < len(rest)
    return first <= rest


def level_sequences(n: int) -> Iterator[list[int]]:
    """Yield one center-rooted level sequence per free tree on ``n >= 4`` vertices."""
    # path rooted at a center
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        first, rest = _split(levels)
        if _centered(first, rest):
            yield levels
            levels = _successor(levels)
            continue
        # Every successor that keeps this first subtree fails the same test, so
        # advance inside the first subtree and restart the rest as a tall path.
        p = len(first)
        jumped = _successor(levels, p)
        if levels[p] > 2:
            h = max(_split(jumped)[0])
            tail = list(range(1, h + 2))
            jumped[len(jumped) - len(tail):] = tail
        levels = jumped


def tree_from_levels(levels: list[int]) -> Tree:
    edges = []
    stack: list[int] = []
    for v, depth in enumerate(levels):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree.from_edges(len(levels), edges)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise InvalidOrderError(f"enumeration supports 1 <= n <= {MAX_ORDER}, got n={n}")


def enumerate_free_trees(n: int) -> Iterator[Tree]:
    """All trees on ``n`` vertices up to isomorphism, in ascending canonical-code order."""
    _check_order(n)
    if n <= 3:
        return iter([path(n)])
    coded = {}
    for levels in level_sequences(n):
        t = tree_from_levels(levels)
        code = canonical_code(t)
        if code in coded:
            raise RuntimeError(f"generator emitted an isomorphism class twice (n={n})")
        coded[code] = t
    return (coded[c] for c in sorted(coded))


def enumerate_with_connected_complement(n: int) -> Iterator[Tree]:
    """Free trees on ``n >= 4`` vertices minus the star, i.e. those with connected complement."""
    if n < 4:
        raise InvalidOrderError(f"need n >= 4, got n={n}")
    star_code = canonical_code(star(n))
    return (t for t in enumerate_free_trees(n) if canonical_code(t) != star_code)


def _peel_key(n: int, seq: Sequence[int], intern: dict) -> tuple:
    """Isomorphism key of the tree decoded from ``seq``, without building a Tree.

    Leaves are stripped layer by layer; each stripped vertex gets an interned id
    for the sorted ids of its already-stripped children, so the one or two
    surviving centers carry a canonical description of the whole tree.
    """
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    for x in seq:
        leaf = degree.index(1)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[leaf] = 0
        degree[x] -= 1
    u = degree.index(1)
    v = degree.index(1, u + 1)
    adj[u].append(v)
    adj[v].append(u)

    deg = [len(a) for a in adj]
    kids: list[list[int]] = [[] for _ in range(n)]
    done = [False] * n
    layer = [i for i in range(n) if deg[i] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for x in layer:
            done[x] = True
            c = tuple(sorted(kids[x]))
            i = intern.setdefault(c, len(intern))
            for y in adj[x]:
                if not done[y]:
                    kids[y].append(i)
                    deg[y] -= 1
                    if deg[y] == 1:
                        nxt.append(y)
        layer = nxt
    return tuple(sorted(tuple(sorted(kids[c])) for c in layer))


@functools.lru_cache(maxsize=None)
def _pruefer_classes(n: int) -> tuple[tuple[int, ...], ...]:
    intern: dict = {}
    first: dict[tuple, tuple[int, ...]] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        k = _peel_key(n, seq, intern)
        if k not in first:
            first[k] = seq
    return tuple(first.values())


def pruefer_free_trees(n: int) -> dict[str, Tree]:
    """Decode all ``n**(n-2)`` Prüfer sequences and keep one tree per isomorphism class.

    Slow by design (about a minute at n = 9); results are cached per order.
    """
    if not 1 <= n <= 9:
        raise InvalidOrderError(f"the Prüfer oracle is limited to 1 <= n <= 9, got n={n}")
    if n <= 2:
        return {canonical_code(path(n)): path(n)}
    out = {}
    for seq in _pruefer_classes(n):
        t = tree_from_pruefer(seq, n)
        out[canonical_code(t)] = t
    return out


def complement_is_connected(t: Tree) -> bool:
    return is_connected(complement(t))
