"""Checks the non-extendability facts (a)-(h) around a longest cycle.

For a longest cycle C of a non-Hamiltonian graph, a component R of G - V(C)
and its attachment vertices A, each item asserts that certain pairs are not
Ore pairs (or, for (g) and (h), that some are). Every quantified instance is
evaluated and violations are reported with their bindings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import is_claw_heavy
from .cycles import attachment_set, off_cycle_components
from .graph import Graph, OrientedCycle, bits, is_k_connected, to_mask
from .ore import OEdgeSet
from .oracle import longest_cycle_oracle

ITEMS = "abcdefgh"
# informational: the endpoint l = vi of the middle clause of (f), which can fail
ENDPOINT_ITEM = "f*"


@dataclass
class ItemResult:
    applicable: bool = False
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "holds": self.holds, "checked": self.checked,
                "violations": self.violations}


@dataclass
class AuditReport:
    applicable: bool
    items: dict[str, ItemResult] = field(default_factory=dict)
    reason: str = ""

    @property
    def holds(self) -> bool:
        return all(r.holds for k, r in self.items.items() if k in ITEMS)

    def violations(self) -> list[dict]:
        return [v for k, r in self.items.items() if k in ITEMS for v in r.violations]

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "reason": self.reason, "holds": self.holds,
                "items": {k: r.to_json() for k, r in self.items.items()}}


def audit_lemma3(
    G: Graph,
    C: OrientedCycle | None = None,
    R=None,
    *,
    verify_longest: bool = True,
    claw_heavy_2conn: bool | None = None,
) -> AuditReport:
    """Evaluate items (a)-(h) for cycle ``C`` and component ``R``.

    ``C`` defaults to the oracle's longest cycle and ``R`` to the first
    component off it. Items (g) and (h) are evaluated only when G is
    2-connected and claw-heavy (pass ``claw_heavy_2conn`` to skip the test).
    """
    if C is None:
        C = longest_cycle_oracle(G)
    elif verify_longest and len(longest_cycle_oracle(G)) > len(C):
        raise ValueError("C is not a longest cycle")
    if len(C) == G.n:
        return AuditReport(False, reason="graph is Hamiltonian")
    comps = off_cycle_components(G, C)
    if R is None:
        R = comps[0]
    Rm = R if isinstance(R, int) else to_mask(R)
    if Rm not in comps:
        raise ValueError("R is not a component of G - V(C)")
    if claw_heavy_2conn is None:
        claw_heavy_2conn = bool(is_k_connected(G, 2)) and is_claw_heavy(G)

    oe = OEdgeSet(G)
    o = oe.has
    e = G.has_edge
    nxt, prv = C.succ, C.pred
    A = attachment_set(G, C, Rm)
    report = AuditReport(True, {k: ItemResult() for k in (*ITEMS, ENDPOINT_ITEM)})
    it = report.items

    def need(item, ok, **binding):
        r = it[item]
        r.applicable = True
        r.checked += 1
        if not ok:
            r.violations.append({"item": item, **binding})

    for u in bits(Rm):
        for vi in A:
            need("a", not o(u, prv(vi)), u=u, vi=vi, pair="u vi-")
            need("a", not o(u, nxt(vi)), u=u, vi=vi, pair="u vi+")

    for vi in A:
        vim, vip = prv(vi), nxt(vi)
        skip_i = o(vim, vip)
        for vj in A:
            if vj == vi:
                continue
            vjm, vjp = prv(vj), nxt(vj)
            b = dict(vi=vi, vj=vj)
            need("b", not o(vim, vjm), pair="vi- vj-", **b)
            need("b", not o(vip, vjp), pair="vi+ vj+", **b)
            if skip_i:
                need("c", not o(vi, vjm), pair="vi vj-", **b)
                need("c", not o(vi, vjp), pair="vi vj+", **b)
            for l in C.segment(vi, vjm):
                lm, lp = prv(l), nxt(l)
                if skip_i and e(l, vi) and e(l, vjm):
                    need("d", not o(lm, lp), l=l, pair="l- l+", **b)
                    need("d", not o(vi, lp), l=l, pair="vi l+", **b)
                if skip_i and e(l, vi):
                    need("e", not o(lm, vjm), l=l, pair="l- vj-", **b)
                    need("e", not o(vjp, lp), l=l, pair="vj+ l+", **b)
                if o(vim, l):
                    need("f", not o(lm, vjm), l=l, pair="l- vj-", **b)
                    # at l = vi the rerouting behind this clause wraps the whole
                    # cycle; that endpoint is tallied apart and is not part of (f)
                    need("f" if l != vi else "f*", not o(lm, vjp), l=l, pair="l- vj+", **b)
                    need("f", not o(lp, vjp), l=l, pair="l+ vj+", **b)
            if claw_heavy_2conn:
                need("h", e(vim, vip) or e(vjm, vjp), **b)
        if claw_heavy_2conn:
            need("g", skip_i, vi=vi)
    return report


def audit_graph(G: Graph, *, claw_heavy_2conn: bool | None = None) -> list[AuditReport]:
    """Audit every component off the oracle's longest cycle."""
    C = longest_cycle_oracle(G)
    if len(C) == G.n:
        return [AuditReport(False, reason="graph is Hamiltonian")]
    if claw_heavy_2conn is None:
        claw_heavy_2conn = bool(is_k_connected(G, 2)) and is_claw_heavy(G)
    return [audit_lemma3(G, C, R, verify_longest=False, claw_heavy_2conn=claw_heavy_2conn)
            for R in off_cycle_components(G, C)]
