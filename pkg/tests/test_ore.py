import random

import pytest
from hypothesis import given, strategies as st

from adh_hamilton.graph import Graph, OrientedCycle
from adh_hamilton.ore import InvariantError, OCycle, OEdgeSet, is_o_cycle, lift_o_cycle

from _strategies import graphs


def virtual_count(G, seq):
    return sum(not G.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1]))


def random_o_cycle(G, rng, tries=50):
    """A random o-cycle by randomised DFS over Ore pairs, or None."""
    oe = OEdgeSet(G)
    for _ in range(tries):
        k = rng.randint(3, G.n)
        seq = [rng.randrange(G.n)]
        while len(seq) < k:
            opts = [w for w in range(G.n) if w not in seq and oe.has(seq[-1], w)]
            if not opts:
                break
            seq.append(rng.choice(opts))
        if len(seq) >= 3 and oe.has(seq[-1], seq[0]):
            return seq
    return None


def test_ore_pairs_inclusive():
    # K4 minus {0,1}: d(0) + d(1) = 4 = n, so the pair is virtual
    G = Graph.complete(4)
    G = Graph.from_edges(4, [e for e in G.edges() if e != (0, 1)])
    oe = OEdgeSet(G)
    assert (0, 1) in oe and oe.is_virtual(1, 0)
    assert not oe.is_virtual(0, 2)
    assert (0, 1) in oe.pairs()


def test_path_endpoints_not_ore():
    G = Graph.path(4)
    assert not OEdgeSet(G).has(0, 3)
    assert not is_o_cycle(G, [0, 1, 2, 3])
    assert is_o_cycle(Graph.cycle(4), [0, 1, 2, 3])
    assert not is_o_cycle(Graph.cycle(4), [0, 1])


def test_lift_anchor_k4_minus_edge():
    G = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    oc = OCycle.of(G, [0, 1, 2])
    assert oc.virtual == (True, False, False)
    C = lift_o_cycle(G, oc)
    assert C.is_real(G)
    # 3 is the only common neighbour of 0 and 1 off the path
    assert set(C.seq) == {0, 1, 2, 3}
    assert C.canonical() == OrientedCycle([0, 2, 1, 3]).canonical()


def test_lift_real_cycle_unchanged():
    G = Graph.cycle(5)
    C = lift_o_cycle(G, [0, 1, 2, 3, 4])
    assert C == OrientedCycle([0, 1, 2, 3, 4])


def test_lift_rejects_non_o_cycle():
    with pytest.raises(ValueError):
        lift_o_cycle(Graph.path(4), [0, 1, 2, 3])


@given(graphs(min_n=3, max_n=10), st.randoms(use_true_random=False))
def test_lift_properties(G, rng):
    seq = random_o_cycle(G, rng)
    if seq is None:
        return
    trace = []
    C = lift_o_cycle(G, seq, trace)
    assert C.is_real(G)
    assert set(seq) <= set(C.seq)
    assert len(trace) <= len(seq)
    counts = [virtual_count(G, seq)] + [virtual_count(G, s) for s in trace]
    assert all(b < a for a, b in zip(counts, counts[1:]))
    assert all(is_o_cycle(G, s) for s in trace)


def test_invariant_error_is_distinct():
    # the abort type must not be confused with input validation errors
    assert not issubclass(InvariantError, ValueError)
