"""Ore pairs, Ore-cycles and lifting an Ore-cycle to a real cycle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, OrientedCycle, bits


class InvariantError(RuntimeError):
    """An internal invariant failed; this is a bug, never an expected outcome."""


class OEdgeSet:
    """Pairs {x, y} with xy an edge or d(x) + d(y) >= n, stored as bit rows."""

    __slots__ = ("graph", "rows")

    def __init__(self, G: Graph):
        deg = G.degrees()
        n = G.n
        rows = []
        for x in range(n):
            row = G.adj[x]
            need = n - deg[x]
            for y in range(n):
                if y != x and deg[y] >= need:
                    row |= 1 << y
            rows.append(row)
        self.graph = G
        self.rows = tuple(rows)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return bool(self.rows[x] >> y & 1)

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def is_virtual(self, x: int, y: int) -> bool:
        return self.has(x, y) and not self.graph.has_edge(x, y)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(len(self.rows)) for y in bits(self.rows[x] >> (x + 1) << (x + 1))]


def o_edges(G: Graph) -> OEdgeSet:
    return OEdgeSet(G)


def is_o_cycle(G: Graph, seq: Sequence[int], oe: OEdgeSet | None = None) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < G.n for v in seq):
        return False
    oe = oe or OEdgeSet(G)
    rows = oe.rows
    prev = seq[-1]
    for v in seq:
        if not rows[prev] >> v & 1:
            return False
        prev = v
    return True


@dataclass(frozen=True)
class OCycle:
    seq: tuple[int, ...]
    virtual: tuple[bool, ...]  # virtual[i] describes the pair (seq[i], seq[i+1])

    @classmethod
    def of(cls, G: Graph, seq: Sequence[int], oe: OEdgeSet | None = None) -> OCycle:
        seq = tuple(seq)
        if not is_o_cycle(G, seq, oe):
            raise ValueError(f"{list(seq)} is not an o-cycle")
        nxt = seq[1:] + seq[:1]
        return cls(seq, tuple(not G.has_edge(a, b) for a, b in zip(seq, nxt)))

    def to_json(self) -> dict:
        return {"seq": list(self.seq), "virtual": list(self.virtual)}


def _first_virtual(G: Graph, seq: list[int]) -> int | None:
    k = len(seq)
    for i in range(k):
        if not G.has_edge(seq[i], seq[(i + 1) % k]):
            return i
    return None


def lift_o_cycle(G: Graph, cycle, trace: list | None = None) -> OrientedCycle:
    """Turn an o-cycle into a real cycle of ``G`` through all of its vertices.

    Each round takes the first virtual pair (v, u) = (s[t], s[t+1]) and reads
    the rest of the cycle as a path p_1 = u, ..., p_m = v. Either some p_i, p_{i+1}
    has v ~ p_i and u ~ p_{i+1}, and the path is rotated to use those two edges;
    or the degree sum forces a common neighbour w of u and v off the path,
    which is inserted. Both strictly lower the number of virtual pairs.
    ``trace`` (if given) receives the working sequence after every round.
    """
    seq = list(cycle.seq if isinstance(cycle, (OCycle, OrientedCycle)) else cycle)
    if not is_o_cycle(G, seq):
        raise ValueError(f"{seq} is not an o-cycle")
    adj = G.adj
    budget = sum(not G.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1]))
    rounds = 0
    while True:
        t = _first_virtual(G, seq)
        if t is None:
            break
        rounds += 1
        if rounds > budget:
            raise InvariantError("virtual pair count did not decrease")
        k = len(seq)
        # path from u around to v
        path = [seq[(t + 1 + s) % k] for s in range(k)]
        u, v = path[0], path[-1]
        m = len(path)
        hit = None
        for i in range(1, m - 2):
            if adj[v] >> path[i] & 1 and adj[u] >> path[i + 1] & 1:
                hit = i
                break
        if hit is not None:
            seq = path[: hit + 1] + path[:hit:-1]
        else:
            on_path = 0
            for x in path:
                on_path |= 1 << x
            common = adj[u] & adj[v] & ~on_path
            if not common:
                raise InvariantError(f"no crossing and no common neighbour for pair {v}-{u}")
            w = (common & -common).bit_length() - 1
            seq = path + [w]
        if trace is not None:
            trace.append(list(seq))
    return OrientedCycle(seq)
