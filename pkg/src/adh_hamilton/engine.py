"""Cycle extension by rerouting templates, and the Hamilton-cycle driver.

A template proposes a cyclic vertex sequence built from the current cycle
C, an off-cycle component and a few chosen cycle vertices. A proposal is kept
only if it is an o-cycle whose vertex set strictly contains V(C); it is then
lifted to a real cycle. Templates are tried in catalogue order, each in the
given orientation of C and then in the reverse one; the first success wins.

Notation used in the template bodies: ``S(a, b)`` walks C forward from a to b,
``B(a, b)`` walks it backward, ``s``/``p`` are successor/predecessor, ``P`` is
a v_i-v_j path through a component R and ``vi``, ``vj`` its ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .classes import ClassProfile, class_profile, is_almost_distance_hereditary
from .cycles import _shortest_through, attachment_set, find_heavy_cycle, off_cycle_components
from .graph import Graph, OrientedCycle, Verdict, bits, is_k_connected, to_mask
from .ore import OEdgeSet, lift_o_cycle
from .oracle import longest_cycle_oracle

MODES = ("theorem3", "theorem4", "generic")


class TheoremContradiction(RuntimeError):
    """A graph meets a theorem's hypotheses but has no Hamilton cycle."""


def walk(*parts) -> list[int]:
    """Concatenate vertices and vertex runs, merging repeated junction vertices
    and dropping a final vertex equal to the first (the closing edge)."""
    out: list[int] = []
    for part in parts:
        for v in (part,) if isinstance(part, int) else part:
            if not out or out[-1] != v:
                out.append(v)
    if len(out) > 1 and out[-1] == out[0]:
        out.pop()
    return out


class Frame:
    """The current cycle in one orientation plus cached off-cycle structure."""

    def __init__(self, G: Graph, C: OrientedCycle, oe: OEdgeSet):
        self.G, self.C, self.oe = G, C, oe
        self.s, self.p = C.succ, C.pred
        self.comps = off_cycle_components(G, C)
        self.attach = [(R, attachment_set(G, C, R)) for R in self.comps]
        self._paths: dict = {}

    def S(self, a: int, b: int) -> tuple[int, ...]:
        return self.C.segment(a, b)

    def B(self, a: int, b: int) -> tuple[int, ...]:
        return self.C.segment(b, a)[::-1]

    def path(self, a: int, b: int, R: int):
        key = (a, b, R)
        if key not in self._paths:
            self._paths[key] = _shortest_through(self.G, a, b, R)
        return self._paths[key]

    def pairs(self) -> Iterator[tuple[int, int, int, tuple[int, ...]]]:
        """(R, vi, vj, P) over components and ordered attachment pairs."""
        for R, A in self.attach:
            for vi in A:
                for vj in A:
                    if vi != vj:
                        P = self.path(vi, vj, R)
                        if P is not None:
                            yield R, vi, vj, P

    def fan_roots(self) -> Iterator[tuple[int, int, int, int]]:
        """(u, v1, v2, vr): u off C, v1 a cycle neighbour, v2 / vr the next /
        previous cycle neighbours of u along the orientation."""
        G, C = self.G, self.C
        for R in self.comps:
            for u in bits(R):
                nc = [v for v in C.seq if G.adj[u] >> v & 1]
                r = len(nc)
                if r < 2:
                    continue
                for i in range(r):
                    yield u, nc[i], nc[(i + 1) % r], nc[i - 1]


# ---------------------------------------------------------------------------
# templates


def t_insert(f: Frame):
    """Put an off-cycle u between consecutive c, c+ when both pairs are Ore pairs."""
    o = f.oe.has
    for R in f.comps:
        for u in bits(R):
            for c in f.C.seq:
                if o(u, c) and o(u, f.s(c)):
                    yield walk(f.S(f.s(c), c), u)


def t_detour(f: Frame):
    G, s = f.G, f.s
    for R, A in f.attach:
        for vi in A:
            for u in bits(R):
                # path vi -> u whose vertices after vi lie in R
                P = _shortest_through(G, vi, u, R & ~(1 << u)) if G.adj[vi] >> u & 1 == 0 else (vi, u)
                if P is None:
                    continue
                yield walk(P, f.S(s(vi), vi))


def t_twin(f: Frame):
    s = f.s
    for _, vi, vj, P in f.pairs():
        yield walk(P, f.B(vj, s(vi)), f.S(s(vj), vi))


def t_skip_bridge(f: Frame):
    s, p = f.s, f.p
    for _, vi, vj, P in f.pairs():
        yield walk(P, f.S(vj, p(vi)), f.S(s(vi), p(vj)))
        yield walk(P, f.B(vj, s(vi)), f.B(p(vi), s(vj)))


def t_skip_fold(f: Frame):
    s, p, S, B = f.s, f.p, f.S, f.B
    for _, vi, vj, P in f.pairs():
        for l in f.C.seq:
            yield walk(P, S(vj, p(vi)), S(s(vi), p(l)), S(s(l), p(vj)), l)
            yield walk(P, S(vj, p(vi)), S(s(vi), l), B(p(vj), s(l)))


def t_skip_swap(f: Frame):
    s, p, S, B = f.s, f.p, f.S, f.B
    for _, vi, vj, P in f.pairs():
        for l in f.C.seq:
            yield walk(P[::-1], S(l, p(vj)), B(p(l), s(vi)), B(p(vi), vj))
            yield walk(P, B(vj, s(l)), S(s(vj), p(vi)), S(s(vi), l))


def t_pred_cross(f: Frame):
    s, p, S, B = f.s, f.p, f.S, f.B
    for _, vi, vj, P in f.pairs():
        for l in f.C.seq:
            yield walk(P, S(vj, p(vi)), S(l, p(vj)), B(p(l), vi))
            yield walk(P[::-1], S(vi, p(l)), S(s(vj), p(vi)), S(l, vj))
            yield walk(P, B(vj, s(l)), S(s(vj), p(vi)), B(l, vi))


def t_short_gap(f: Frame):
    s, p, S = f.s, f.p, f.S
    for _, vi, vj, P in f.pairs():
        yield walk(P, p(vj), S(s(vj), p(vi)), s(vi))
        yield walk(P, p(vj), S(s(vj), vi))


def t_wing(f: Frame):
    G, s, p, S = f.G, f.s, f.p, f.S
    for R, A in f.attach:
        for vj in A:
            for u in bits(R & G.adj[vj]):
                for w in f.C.seq:
                    yield walk(u, S(w, p(vj)), S(s(vj), p(w)), vj)


def t_fan_cross(f: Frame):
    s, p, S = f.s, f.p, f.S
    for u, v1, v2, vr in f.fan_roots():
        yield walk(p(v1), S(v2, vr), u, S(v1, p(v2)), S(s(vr), p(v1)))


def t_fan_fold(f: Frame):
    s, p, S, B = f.s, f.p, f.S, f.B
    for u, v1, v2, vr in f.fan_roots():
        for l in f.C.seq:
            yield walk(v1, B(p(l), s(v1)), B(p(v1), s(vr)), B(p(v2), l), S(v2, vr), u)


def t_fan_back(f: Frame):
    s, p, S, B = f.s, f.p, f.S, f.B
    for u, v1, v2, vr in f.fan_roots():
        for l in f.C.seq:
            yield walk(v1, u, S(v2, l), B(p(v2), s(v1)), S(s(l), v1))


def t_fan_double(f: Frame):
    s, p, S, B = f.s, f.p, f.S, f.B
    seq = f.C.seq
    for u, v1, v2, vr in f.fan_roots():
        for l1, lr in product(seq, seq):
            yield walk(vr, u, B(v2, l1), S(s(v2), p(vr)), S(s(vr), p(lr)), B(p(l1), lr))


def t_fan_hop(f: Frame):
    s, p, S = f.s, f.p, f.S
    for u, v1, v2, vr in f.fan_roots():
        for lr in f.C.seq:
            yield walk(vr, u, v1, S(s(lr), p(v1)), S(s(v1), p(vr)), S(s(vr), lr))
            yield walk(vr, S(lr, p(v1)), S(s(v1), p(vr)), S(s(vr), p(lr)), v1, u)


def t_fan_braid(f: Frame):
    s, p, S, B = f.s, f.p, f.S, f.B
    seq = f.C.seq
    for u, v1, v2, vr in f.fan_roots():
        for l2, lr in product(seq, seq):
            yield walk(vr, u, v2, B(l2, s(lr)), S(s(l2), p(v2)), S(s(v2), p(vr)), S(s(vr), lr))


@dataclass(frozen=True)
class Template:
    name: str
    propose: Callable[[Frame], Iterator[list[int]]]
    symmetric: bool = False  # reversing C yields the same proposals


CATALOGUE: tuple[Template, ...] = (
    Template("insert", t_insert, symmetric=True),
    Template("detour", t_detour),
    Template("twin", t_twin),
    Template("skip_bridge", t_skip_bridge),
    Template("skip_fold", t_skip_fold),
    Template("skip_swap", t_skip_swap),
    Template("pred_cross", t_pred_cross),
    Template("short_gap", t_short_gap),
    Template("wing", t_wing),
    Template("fan_cross", t_fan_cross),
    Template("fan_fold", t_fan_fold),
    Template("fan_back", t_fan_back),
    Template("fan_double", t_fan_double),
    Template("fan_hop", t_fan_hop),
    Template("fan_braid", t_fan_braid),
)


@dataclass
class Extended:
    cycle: OrientedCycle
    template: str
    proposal: list[int]


@dataclass
class Stuck:
    cycle: OrientedCycle
    tried: dict[str, int]  # template -> proposals examined


def extend_cycle(G: Graph, C: OrientedCycle, oe: OEdgeSet | None = None,
                 catalogue: tuple[Template, ...] = CATALOGUE) -> Extended | Stuck:
    """Lengthen ``C`` with the first template proposal that validates."""
    if len(C) >= G.n:
        raise ValueError("cycle is already Hamiltonian")
    oe = oe or OEdgeSet(G)
    rows = oe.rows
    cmask = C.mask
    frames = [Frame(G, C, oe)]
    tried: dict[str, int] = {}
    for tpl in catalogue:
        count = 0
        for k in range(1 if tpl.symmetric else 2):
            if k == len(frames):
                frames.append(Frame(G, C.reversed(), oe))
            for seq in tpl.propose(frames[k]):
                count += 1
                if len(seq) <= len(C) or len(set(seq)) != len(seq):
                    continue
                smask = to_mask(seq)
                if cmask & ~smask:
                    continue
                prev = seq[-1]
                for v in seq:
                    if not rows[prev] >> v & 1:
                        break
                    prev = v
                else:
                    lifted = lift_o_cycle(G, seq)
                    return Extended(lifted, tpl.name, seq)
        tried[tpl.name] = count
    return Stuck(C, tried)


# ---------------------------------------------------------------------------
# driver


@dataclass
class HamiltonCycle:
    cycle: OrientedCycle
    steps: list[str] = field(default_factory=list)

    kind = "hamilton_cycle"

    def to_json(self) -> dict:
        return {"kind": self.kind, "cycle": list(self.cycle.seq), "steps": self.steps}


@dataclass
class HypothesisViolation:
    verdict: Verdict

    kind = "hypothesis_violation"

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": self.verdict.witness}


@dataclass
class ProofCaseMiss:
    cycle: OrientedCycle
    component: tuple[int, ...]
    longer: OrientedCycle
    tried: dict[str, int]
    steps: list[str] = field(default_factory=list)

    kind = "proof_case_miss"

    def to_json(self) -> dict:
        return {"kind": self.kind, "cycle": list(self.cycle.seq), "component": list(self.component),
                "longer": list(self.longer.seq), "tried": self.tried, "steps": self.steps}


@dataclass
class NonHamiltonian:
    """Generic mode only: the engine stalled on a cycle the oracle certifies longest."""

    cycle: OrientedCycle

    kind = "non_hamiltonian"

    def to_json(self) -> dict:
        return {"kind": self.kind, "longest": list(self.cycle.seq)}


EngineOutcome = HamiltonCycle | HypothesisViolation | ProofCaseMiss | NonHamiltonian


def check_hypotheses(G: Graph, mode: str, profile: ClassProfile | None = None) -> Verdict:
    """Connectivity, claw condition and ADH for ``mode``, in that order."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    k = {"theorem3": 2, "theorem4": 3, "generic": 2}[mode]
    conn = is_k_connected(G, k)
    if not conn:
        return Verdict(False, {"hypothesis": f"{k}-connected", **conn.witness})
    if mode == "generic":
        return Verdict(True)
    prof = profile or class_profile(G)
    flag = "claw_heavy" if mode == "theorem3" else "one_heavy"
    if not getattr(prof, flag):
        claw = prof.failing_witness[flag]
        return Verdict(False, {"hypothesis": flag, "claw": list(claw.vertices())})
    adh = is_almost_distance_hereditary(G)
    if not adh:
        return Verdict(False, {"hypothesis": "almost_distance_hereditary", **adh.witness})
    return Verdict(True)


def is_hamilton_cycle(G: Graph, C: OrientedCycle) -> bool:
    return len(C) == G.n and C.is_real(G)


def find_hamilton_cycle(G: Graph, mode: str = "theorem3", *, check: bool = True) -> EngineOutcome:
    """Grow a heavy cycle with :func:`extend_cycle` until it is Hamiltonian.

    With ``check=False`` the hypothesis test is skipped (the caller has done it).
    """
    if G.n < 3:
        raise ValueError("Hamilton cycles need n >= 3")
    if check:
        verdict = check_hypotheses(G, mode)
        if not verdict:
            return HypothesisViolation(verdict)
    C = find_heavy_cycle(G)
    oe = OEdgeSet(G)
    steps: list[str] = []
    while len(C) < G.n:
        res = extend_cycle(G, C, oe)
        if isinstance(res, Stuck):
            longest = longest_cycle_oracle(G)
            if len(longest) > len(C):
                R = off_cycle_components(G, C)[0]
                return ProofCaseMiss(C, tuple(bits(R)), longest, res.tried, steps)
            if mode == "generic":
                return NonHamiltonian(C)
            raise TheoremContradiction(f"{mode} hypotheses hold but the longest cycle has length {len(C)} < {G.n}")
        if len(res.cycle) <= len(C) or not res.cycle.is_real(G) or C.mask & ~res.cycle.mask:
            raise RuntimeError("extension did not produce a longer real cycle through V(C)")
        C = res.cycle
        steps.append(res.template)
    if not is_hamilton_cycle(G, C):
        raise RuntimeError("engine produced an invalid Hamilton cycle")
    return HamiltonCycle(C, steps)
