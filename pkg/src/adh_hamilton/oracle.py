"""Exhaustive ground truth: Hamiltonicity, longest cycles and the literal
almost-distance-hereditary definition.

Nothing here uses the engine or the fast predicates, so it can certify them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, OrientedCycle, Verdict, bits

ADH_ORACLE_MAX_N = 12


@dataclass
class OracleResult:
    found: bool
    cycle: OrientedCycle | None
    nodes_explored: int


def _reach(adj, start: int, within: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def hamiltonian_oracle(G: Graph) -> OracleResult:
    """Backtracking from vertex 0 with degree and connectivity pruning."""
    n = G.n
    if n < 3:
        raise ValueError("Hamiltonicity needs n >= 3")
    adj = G.adj
    full = G.full_mask
    if any(row.bit_count() < 2 for row in adj):
        return OracleResult(False, None, 0)
    explored = 0
    path = [0]

    def viable(end: int, free: int) -> bool:
        if not free:
            return True
        # every free vertex needs two usable neighbours among free + path ends
        usable = free | 1 << end | 1
        for w in bits(free):
            if (adj[w] & usable).bit_count() < 2:
                return False
        start = (free & -free).bit_length() - 1
        return _reach(adj, start, free) == free

    def dfs(end: int, free: int) -> bool:
        nonlocal explored
        explored += 1
        if not free:
            return bool(adj[end] & 1)
        for w in bits(adj[end] & free):
            rest = free & ~(1 << w)
            if rest and not adj[w] & rest:
                continue
            if viable(w, rest):
                path.append(w)
                if dfs(w, rest):
                    return True
                path.pop()
        return False

    if dfs(0, full & ~1):
        return OracleResult(True, OrientedCycle(path), explored)
    return OracleResult(False, None, explored)


def longest_cycle_oracle(G: Graph) -> OrientedCycle:
    """A maximum-length cycle; among those, the lexicographically least
    sequence that starts at its smallest vertex."""
    adj = G.adj
    n = G.n
    best: list[int] | None = None
    best_len = 2

    for s in range(n):
        if n - s <= best_len:
            break
        higher = G.full_mask & ~((2 << s) - 1)
        path = [s]

        def dfs(end: int, free: int):
            nonlocal best, best_len
            if len(path) >= 3 and adj[end] >> s & 1 and len(path) > best_len:
                best, best_len = list(path), len(path)
                if best_len == n - s:
                    return True
            bound = len(path) + (_reach(adj, end, free | 1 << end).bit_count() - 1)
            if bound <= best_len:
                return False
            for w in bits(adj[end] & free):
                path.append(w)
                if dfs(w, free & ~(1 << w)):
                    return True
                path.pop()
            return False

        dfs(s, higher)
    if best is None:
        raise ValueError("graph is acyclic")
    return OrientedCycle(best)


def _all_pairs_within(adj, mask: int) -> dict[int, dict[int, int]]:
    out = {}
    for x in bits(mask):
        dist = {x: 0}
        seen = frontier = 1 << x
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
            for v in bits(frontier):
                dist[v] = d
        out[x] = dist
    return out


def adh_oracle(G: Graph, max_n: int = ADH_ORACLE_MAX_N, slack: int = 1) -> Verdict:
    """Literal check over every connected induced subgraph, smallest first.

    ``slack=0`` turns this into the distance-hereditary definition.
    """
    n = G.n
    if n > max_n:
        raise ValueError(f"n={n} exceeds the oracle bound {max_n}")
    adj = G.adj
    d_G = _all_pairs_within(adj, G.full_mask)
    if len(d_G[0]) != n:
        raise ValueError("graph is disconnected")
    for size in range(3, n + 1):
        for S in combinations(range(n), size):
            mask = 0
            for v in S:
                mask |= 1 << v
            if _reach(adj, S[0], mask) != mask:
                continue
            d_H = _all_pairs_within(adj, mask)
            for x, y in combinations(S, 2):
                if d_H[x][y] > d_G[x][y] + slack:
                    return Verdict(False, {
                        "vertices": list(S), "x": x, "y": y,
                        "d_H": d_H[x][y], "d_G": d_G[x][y],
                    })
    return Verdict(True)
