"""Claws, heaviness classes and (almost) distance-hereditary recognition."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .graph import INF, Graph, Verdict, all_distances, bits, induced, bfs_layers, is_connected


class Claw(NamedTuple):
    """Induced K_{1,3}; the centre is always listed first."""

    center: int
    ends: tuple[int, int, int]

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.center, *self.ends)


@dataclass(frozen=True)
class ClawStatus:
    heavy_end_count: int
    max_pair_degree_sum: int
    n: int

    @property
    def light(self) -> bool:
        return self.heavy_end_count == 0

    @property
    def o_light(self) -> bool:
        return self.max_pair_degree_sum < self.n


@dataclass
class ClassProfile:
    claw_free: bool
    one_heavy: bool
    two_heavy: bool
    claw_heavy: bool
    failing_witness: dict[str, Claw] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "claw_free": self.claw_free,
            "one_heavy": self.one_heavy,
            "two_heavy": self.two_heavy,
            "claw_heavy": self.claw_heavy,
        }
        out["witness"] = {k: list(c.vertices()) for k, c in self.failing_witness.items()}
        return out


def is_heavy(G: Graph, v: int) -> bool:
    return 2 * G.degree(v) >= G.n


def find_claws(G: Graph) -> Iterator[Claw]:
    """Every claw once, ordered by centre and then by the sorted end triple."""
    adj = G.adj
    for c in range(G.n):
        nb = adj[c]
        for a in bits(nb):
            pool_a = nb & ~adj[a] & ~((2 << a) - 1)
            for b in bits(pool_a):
                for d in bits(pool_a & ~adj[b] & ~((2 << b) - 1)):
                    yield Claw(c, (a, b, d))


def _check_claw(G: Graph, claw: Claw):
    c, (a, b, d) = claw
    if len({c, a, b, d}) != 4:
        raise ValueError(f"{claw} repeats a vertex")
    if not all(G.has_edge(c, e) for e in (a, b, d)):
        raise ValueError(f"{claw}: centre not adjacent to every end")
    if G.has_edge(a, b) or G.has_edge(a, d) or G.has_edge(b, d):
        raise ValueError(f"{claw}: ends not independent")


def claw_status(G: Graph, claw: Claw) -> ClawStatus:
    _check_claw(G, claw)
    deg = [G.degree(e) for e in claw.ends]
    heavy = sum(2 * d >= G.n for d in deg)
    best = max(deg[0] + deg[1], deg[0] + deg[2], deg[1] + deg[2])
    return ClawStatus(heavy, best, G.n)


def class_profile(G: Graph) -> ClassProfile:
    n = G.n
    deg = G.degrees()
    heavy = [2 * d >= n for d in deg]
    witness: dict[str, Claw] = {}
    for claw in find_claws(G):
        witness.setdefault("claw_free", claw)
        a, b, d = claw.ends
        nh = heavy[a] + heavy[b] + heavy[d]
        if nh == 0:
            witness.setdefault("one_heavy", claw)
        if nh < 2:
            witness.setdefault("two_heavy", claw)
        if max(deg[a] + deg[b], deg[a] + deg[d], deg[b] + deg[d]) < n:
            witness.setdefault("claw_heavy", claw)
        if "one_heavy" in witness and "claw_heavy" in witness:
            break
    return ClassProfile(
        claw_free="claw_free" not in witness,
        one_heavy="one_heavy" not in witness,
        two_heavy="two_heavy" not in witness,
        claw_heavy="claw_heavy" not in witness,
        failing_witness=witness,
    )


def is_claw_heavy(G: Graph) -> bool:
    deg = G.degrees()
    n = G.n
    for claw in find_claws(G):
        a, b, d = claw.ends
        if max(deg[a] + deg[b], deg[a] + deg[d], deg[b] + deg[d]) < n:
            return False
    return True


def is_one_heavy(G: Graph) -> bool:
    n = G.n
    light = [2 * d < n for d in G.degrees()]
    return not any(light[a] and light[b] and light[d] for _, (a, b, d) in find_claws(G))


# ---------------------------------------------------------------------------
# distance heredity


def _induced_path_search(G: Graph, slack: int) -> dict | None:
    """First induced path (lexicographic DFS order) longer than d_G + slack.

    A shortest path inside an induced subgraph is an induced path of G, and an
    induced x-y path P is the unique x-y path of G[V(P)]. So the stretch
    bound holds for every connected induced subgraph exactly when it holds
    for every induced path.
    """
    adj = G.adj
    dist = all_distances(G)
    for x in range(G.n):
        dx = dist[x]
        # frames: (path, blocked mask of closed neighbourhoods before the last vertex)
        stack = [((x,), 0)]
        while stack:
            path, blocked = stack.pop()
            last = path[-1]
            L = len(path) - 1
            if L > dx[last] + slack:
                return {
                    "vertices": sorted(path),
                    "path": list(path),
                    "x": x,
                    "y": last,
                    "d_H": L,
                    "d_G": dx[last],
                }
            nblocked = blocked | adj[last] | (1 << last)
            # push in reverse so the smallest extension is explored first
            for w in reversed(list(bits(adj[last] & ~blocked))):
                stack.append((path + (w,), nblocked))
    return None


def _require_connected(G: Graph):
    if not is_connected(G):
        raise ValueError("distance heredity is only defined here for connected graphs")


def is_distance_hereditary(G: Graph) -> Verdict:
    _require_connected(G)
    w = _induced_path_search(G, 0)
    return Verdict(True) if w is None else Verdict(False, w)


def is_almost_distance_hereditary(G: Graph) -> Verdict:
    _require_connected(G)
    w = _induced_path_search(G, 1)
    return Verdict(True) if w is None else Verdict(False, w)


def recheck_stretch(G: Graph, witness: dict) -> int:
    """Recompute d_H - d_G for a stretch witness on ``induced(G, witness['vertices'])``."""
    H = induced(G, witness["vertices"])
    local = {v: i for i, v in enumerate(H.labels)}
    d_H = bfs_layers(H, local[witness["x"]]).get(local[witness["y"]], INF)
    d_G = bfs_layers(G, witness["x"]).get(witness["y"], INF)
    return d_H - d_G
