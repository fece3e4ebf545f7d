"""Graph families: the claw-heavy but not 2-heavy example, seeded random
graphs and the full labeled-graph stream."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph

MAX_LABELED_N = 7


@dataclass(frozen=True)
class Remark1Params:
    n: int

    def __post_init__(self):
        if self.n % 2 or self.n < 10:
            raise ValueError(f"n must be an even integer >= 10, got {self.n}")


@dataclass(frozen=True)
class Remark1Layout:
    """Vertex roles in :func:`gen_remark1`."""

    big: tuple[int, ...]    # the K_{n/2} block; big[0] is y
    small: tuple[int, ...]  # the K_{n/2-3} block
    v: int
    u: int
    x: int

    @property
    def y(self) -> int:
        return self.big[0]


def remark1_layout(n: int) -> Remark1Layout:
    Remark1Params(n)
    h = n // 2
    return Remark1Layout(tuple(range(h)), tuple(range(h, n - 3)), n - 3, n - 2, n - 1)


def gen_remark1(n: int) -> Graph:
    """Join of K_{n/2} and K_{n/2-3} plus v, u, x.

    Labels: the K_{n/2} block is 0..n/2-1 (y = 0), the K_{n/2-3} block
    follows, then v = n-3, u = n-2, x = n-1. u is adjacent to v, y, x;
    v and x are adjacent to every vertex of the small block.
    """
    lay = remark1_layout(n)
    clique = lay.big + lay.small
    edges = list(combinations(clique, 2))
    edges += [(lay.u, lay.v), (lay.u, lay.y), (lay.u, lay.x)]
    edges += [(lay.v, w) for w in lay.small] + [(lay.x, w) for w in lay.small]
    return Graph.from_edges(n, edges)


def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) from a seeded generator; pairs are drawn in lexicographic order."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs, edge mask bit k <-> k-th pair in lex order."""
    if n > MAX_LABELED_N:
        raise ValueError(f"n={n} is too large for labeled enumeration; feed a graph6 stream instead")
    if n < 1:
        raise ValueError("n must be positive")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        k = 0
        while mask:
            if mask & 1:
                a, b = pairs[k]
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            mask >>= 1
            k += 1
        yield Graph(n, tuple(adj))
