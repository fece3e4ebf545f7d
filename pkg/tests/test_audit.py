import pytest

from adh_hamilton.audit import ENDPOINT_ITEM, ITEMS, audit_graph, audit_lemma3
from adh_hamilton.graph import Graph, OrientedCycle, parse_graph6
from adh_hamilton.oracle import longest_cycle_oracle

from _strategies import petersen


def test_petersen_items_hold():
    G = petersen()
    rep = audit_lemma3(G)
    assert rep.applicable and rep.holds
    for item in "abf":
        assert rep.items[item].applicable, item
    # no v- v+ pair is an Ore pair (girth 5, degree sums 6 < 10): (c)-(e) are vacuous
    assert not any(rep.items[item].applicable for item in "cde")
    # Petersen is not claw-heavy, so (g) and (h) are not evaluated
    assert not rep.items["g"].applicable and not rep.items["h"].applicable
    assert rep.to_json()["holds"]


def test_hamiltonian_not_applicable():
    rep = audit_lemma3(Graph.complete(5))
    assert not rep.applicable and rep.reason == "graph is Hamiltonian"
    assert not audit_graph(Graph.cycle(5))[0].applicable


def test_requires_longest_cycle():
    G = petersen()
    with pytest.raises(ValueError):
        audit_lemma3(G, OrientedCycle([0, 1, 2, 3, 4]))


def test_component_must_be_off_cycle():
    G = petersen()
    C = longest_cycle_oracle(G)
    with pytest.raises(ValueError):
        audit_lemma3(G, C, [C.seq[0]])


def test_endpoint_clause_reported_apart():
    # the middle clause of (f) fails at l = v_i on this 6-vertex graph
    G = parse_graph6("ECxo")
    (rep,) = audit_graph(G)
    assert rep.holds
    bad = rep.items[ENDPOINT_ITEM].violations
    assert bad and all(v["l"] == v["vi"] and v["pair"] == "l- vj+" for v in bad)
    assert ENDPOINT_ITEM not in ITEMS
