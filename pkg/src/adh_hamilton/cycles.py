"""Heavy cycles, off-cycle components, attachment paths and (u, C)-fans."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, OrientedCycle, bits, components, fan_paths, is_k_connected, to_mask


def heavy_mask(G: Graph) -> int:
    return to_mask(v for v in range(G.n) if 2 * G.degree(v) >= G.n)


def find_heavy_cycle(G: Graph) -> OrientedCycle:
    """A cycle through every heavy vertex, by backtracking from the least heavy vertex.

    Such a cycle exists in every 2-connected graph; the search is exponential
    in the worst case and meant for small graphs.
    """
    if G.n < 3:
        raise ValueError("cycles need n >= 3")
    if not is_k_connected(G, 2):
        raise ValueError("graph is not 2-connected")
    adj = G.adj
    heavy = heavy_mask(G)
    s = (heavy & -heavy).bit_length() - 1 if heavy else 0
    path = [s]

    def reach(end: int, free: int) -> int:
        seen = frontier = 1 << end
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & free & ~seen
            seen |= frontier
        return seen

    def dfs(end: int, free: int, missing: int) -> bool:
        if not missing and len(path) >= 3 and adj[end] >> s & 1:
            return True
        if missing & ~reach(end, free):
            return False
        for w in bits(adj[end] & free):
            path.append(w)
            if dfs(w, free & ~(1 << w), missing & ~(1 << w)):
                return True
            path.pop()
        return False

    if not dfs(s, G.full_mask & ~(1 << s), heavy & ~(1 << s)):
        raise RuntimeError("no heavy cycle found in a 2-connected graph")
    return OrientedCycle(path)


def off_cycle_components(G: Graph, C: OrientedCycle) -> list[int]:
    """Components of G - V(C) as vertex masks."""
    return components(G, G.full_mask & ~C.mask)


def _as_mask(R) -> int:
    return R if isinstance(R, int) else to_mask(R)


def _check_component(G: Graph, C: OrientedCycle, R: int):
    if not R or R not in off_cycle_components(G, C):
        raise ValueError("R is not a component of G - V(C)")


def attachment_set(G: Graph, C: OrientedCycle, R) -> list[int]:
    """N_C(R) in orientation order, starting from the first vertex of ``C.seq``."""
    R = _as_mask(R)
    nb = 0
    for r in bits(R):
        nb |= G.adj[r]
    return [v for v in C.seq if nb >> v & 1]


def _shortest_through(G: Graph, a: int, b: int, R: int) -> tuple[int, ...] | None:
    """Lexicographically least shortest a-b path with all (>= 1) internal vertices in R."""
    adj = G.adj
    dist = {b: 0}
    frontier = 1 << b
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & R & ~seen
        seen |= frontier
        for v in bits(frontier):
            dist[v] = d
    starts = [r for r in bits(adj[a] & R) if r in dist]
    if not starts:
        return None
    cur = min(starts, key=lambda r: (dist[r], r))
    path = [a, cur]
    while dist[cur] > 1:
        cur = min(r for r in bits(adj[cur] & R) if dist.get(r) == dist[cur] - 1)
        path.append(cur)
    path.append(b)
    return tuple(path)


def choose_path(G: Graph, C: OrientedCycle, R) -> tuple[int, ...]:
    """(v_i, v_j)-path through R minimising the open gap C(v_i, v_j), then its order."""
    R = _as_mask(R)
    A = attachment_set(G, C, R)
    best = None
    for a in A:
        for b in A:
            if a == b:
                continue
            P = _shortest_through(G, a, b, R)
            if P is None:
                continue
            key = (len(C.segment(a, b, "()")), len(P), P)
            if best is None or key < best:
                best = key
    if best is None:
        raise ValueError("no path between two attachment vertices through R")
    return best[2]


@dataclass(frozen=True)
class AttachmentStructure:
    cycle: OrientedCycle
    component_vertices: frozenset[int]
    attachment_set: tuple[int, ...]
    chosen_path: tuple[int, ...]


def attachment(G: Graph, C: OrientedCycle, R) -> AttachmentStructure:
    R = _as_mask(R)
    _check_component(G, C, R)
    A = attachment_set(G, C, R)
    if len(A) < 2:
        raise ValueError("component attaches to fewer than two cycle vertices")
    return AttachmentStructure(C, frozenset(bits(R)), tuple(A), choose_path(G, C, R))


@dataclass(frozen=True)
class Fan:
    root: int
    legs: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def terminals(self) -> tuple[int, int, int]:
        return tuple(q[-1] for q in self.legs)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for q in self.legs for v in q)


def _paths_to_cycle(G: Graph, u: int, cmask: int) -> list[tuple[int, ...]]:
    out = []
    adj = G.adj
    path = [u]

    def dfs(end: int, used: int):
        for w in bits(adj[end] & ~used):
            if cmask >> w & 1:
                out.append(tuple(path) + (w,))
            else:
                path.append(w)
                dfs(w, used | 1 << w)
                path.pop()

    dfs(u, 1 << u)
    return out


def build_fan(G: Graph, C: OrientedCycle, u: int) -> Fan:
    """The (u, C)-fan minimising, in order: whether Q1 is a single edge, the
    number of vertices of C[w_i, w_j], |V(Q2)|, that of C[w_k, w_i], |V(Q3)|,
    with ties broken by the legs' vertex sequences."""
    if u in C:
        raise ValueError("fan root must lie off the cycle")
    cmask = C.mask
    if len(fan_paths(G, u, cmask, limit=3)) < 3:
        raise ValueError("fewer than three disjoint paths from u to the cycle")
    paths = _paths_to_cycle(G, u, cmask)
    inner = [to_mask(q[1:-1]) for q in paths]
    pos = C.pos
    L = len(C)
    best = None
    for a, b, c in combinations(range(len(paths)), 3):
        if inner[a] & inner[b] or inner[a] & inner[c] or inner[b] & inner[c]:
            continue
        legs = [paths[a], paths[b], paths[c]]
        if len({q[-1] for q in legs}) < 3:
            continue
        legs.sort(key=lambda q: pos[q[-1]])
        for r in range(3):
            q1, q2, q3 = legs[r], legs[(r + 1) % 3], legs[(r + 2) % 3]
            wi, wj, wk = q1[-1], q2[-1], q3[-1]
            key = (
                len(q1) != 2,
                (pos[wj] - pos[wi]) % L + 1,
                len(q2),
                (pos[wi] - pos[wk]) % L + 1,
                len(q3),
                q1, q2, q3,
            )
            if best is None or key < best[0]:
                best = (key, (q1, q2, q3))
    return Fan(u, best[1])
