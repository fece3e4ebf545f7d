"""Exhaustive theorem verification over graph streams.

Each graph gets a class profile (with the lattice claw_free => two_heavy =>
claw_heavy => one_heavy checked), a hypothesis verdict for the selected
theorem and, when the hypotheses hold, an oracle Hamiltonicity check plus an
engine run. Records keep input order; aggregate counters are always derived
from the records.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .classes import ClassProfile, class_profile, is_almost_distance_hereditary, is_distance_hereditary
from .engine import (
    HamiltonCycle,
    HypothesisViolation,
    ProofCaseMiss,
    TheoremContradiction,
    check_hypotheses,
    find_hamilton_cycle,
    is_hamilton_cycle,
)
from .graph import Graph, emit_graph6, is_connected, is_k_connected
from .ore import InvariantError
from .oracle import hamiltonian_oracle

THEOREMS = {"3": "theorem3", "4": "theorem4", "theorem3": "theorem3", "theorem4": "theorem4"}


def theorem_mode(theorem) -> str:
    try:
        return THEOREMS[str(theorem)]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}; expected 3 or 4") from None


def lattice_violation(p: ClassProfile) -> str | None:
    """The first broken implication of the heaviness lattice, if any."""
    chain = [("claw_free", p.claw_free), ("two_heavy", p.two_heavy),
             ("claw_heavy", p.claw_heavy), ("one_heavy", p.one_heavy)]
    for (a, x), (b, y) in zip(chain, chain[1:]):
        if x and not y:
            return f"{a} without {b}"
    return None


def structure_summary(G: Graph) -> dict:
    """Connectivity and (A)DH verdicts, as JSON."""
    out = {}
    connected = is_connected(G)
    out["connected"] = connected
    out["two_connected"] = bool(is_k_connected(G, 2)) if G.n > 2 else False
    out["three_connected"] = bool(is_k_connected(G, 3)) if G.n > 3 else False
    if connected:
        dh = is_distance_hereditary(G)
        adh = dh if dh else is_almost_distance_hereditary(G)
        out["dh"] = dh.to_json()
        out["adh"] = adh.to_json()
    return out


@dataclass
class GraphRecord:
    i: int
    g6: str
    n: int
    status: str  # skipped | verified | miss | counterexample
    profile: dict
    outcome: dict
    oracle: dict | None
    ms: float
    steps: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"i": self.i, "g6": self.g6, "status": self.status, "profile": self.profile,
                "outcome": self.outcome, "oracle": self.oracle, "ms": round(self.ms, 3)}


def verify_graph(G: Graph, theorem="3", *, oracle: bool = True, i: int = 0, g6: str | None = None) -> GraphRecord:
    """Check one graph against the selected theorem.

    Raises InvariantError on a lattice violation, an invalid engine cycle or
    a miss without a genuinely longer cycle.
    """
    mode = theorem_mode(theorem)
    t0 = time.perf_counter()
    g6 = g6 if g6 is not None else emit_graph6(G)
    prof = class_profile(G)
    broken = lattice_violation(prof)
    if broken:
        raise InvariantError(f"class lattice violated on {g6}: {broken}")
    profile = prof.to_json()

    def record(status, outcome, oracle_json=None, steps=()):
        ms = (time.perf_counter() - t0) * 1000
        return GraphRecord(i, g6, G.n, status, profile, outcome, oracle_json, ms, list(steps))

    if G.n < 3:
        return record("skipped", {"kind": "hypothesis_violation", "witness": {"reason": "n < 3"}})
    verdict = check_hypotheses(G, mode, prof)
    if not verdict:
        return record("skipped", HypothesisViolation(verdict).to_json())

    oracle_json = None
    if oracle:
        res = hamiltonian_oracle(G)
        oracle_json = {"hamiltonian": res.found, "nodes": res.nodes_explored}
        if not res.found:
            return record("counterexample", {"kind": "counterexample", "theorem": mode}, oracle_json)
    try:
        out = find_hamilton_cycle(G, mode, check=False)
    except TheoremContradiction as exc:
        return record("counterexample", {"kind": "theorem_contradiction", "message": str(exc)}, oracle_json)
    if isinstance(out, HamiltonCycle):
        if not is_hamilton_cycle(G, out.cycle):
            raise InvariantError(f"engine returned an invalid Hamilton cycle on {g6}")
        return record("verified", out.to_json(), oracle_json, out.steps)
    if isinstance(out, ProofCaseMiss):
        if not (out.longer.is_real(G) and len(out.longer) > len(out.cycle)):
            raise InvariantError(f"silent stall on {g6}: miss without a longer cycle")
        return record("miss", out.to_json(), oracle_json, out.steps)
    raise InvariantError(f"unexpected engine outcome {out!r} on {g6}")


@dataclass
class RunReport:
    theorem: str
    records: list[GraphRecord] = field(default_factory=list)
    halted: bool = False

    def add(self, rec: GraphRecord):
        self.records.append(rec)
        if rec.status == "counterexample":
            self.halted = True

    def counters(self) -> dict:
        status = Counter(r.status for r in self.records)
        templates = Counter(t for r in self.records for t in r.steps)
        misses_by_n = Counter(r.n for r in self.records if r.status == "miss")
        satisfying = len(self.records) - status["skipped"]
        # a miss counts only when the oracle confirmed the Hamilton cycle
        hamiltonian = sum(1 for r in self.records
                          if r.status == "verified" or (r.oracle or {}).get("hamiltonian"))
        return {
            "total": len(self.records),
            "hypothesis": satisfying,
            "hamiltonian": hamiltonian,
            "engine_success": status["verified"],
            "misses": status["miss"],
            "misses_by_n": dict(sorted(misses_by_n.items())),
            "counterexamples": status["counterexample"],
            "templates": dict(sorted(templates.items())),
        }

    @property
    def misses(self) -> list[GraphRecord]:
        return [r for r in self.records if r.status == "miss"]

    @property
    def counterexamples(self) -> list[GraphRecord]:
        return [r for r in self.records if r.status == "counterexample"]

    def summary(self) -> dict:
        return {"summary": True, "theorem": self.theorem, "halted": self.halted, **self.counters()}


def verify_stream(graphs: Iterable[Graph], theorem="3", *, oracle: bool = True) -> RunReport:
    """Verify graphs in order, halting at the first counterexample."""
    report = RunReport(theorem_mode(theorem))
    for i, G in enumerate(graphs):
        report.add(verify_graph(G, theorem, oracle=oracle, i=i))
        if report.halted:
            break
    return report
