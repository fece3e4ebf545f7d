from itertools import combinations

import pytest
from hypothesis import given

from adh_hamilton.classes import (
    Claw,
    claw_status,
    class_profile,
    find_claws,
    is_almost_distance_hereditary,
    is_claw_heavy,
    is_distance_hereditary,
    is_one_heavy,
    recheck_stretch,
)
from adh_hamilton.graph import Graph, is_connected
from adh_hamilton.oracle import adh_oracle
from adh_hamilton.verify import lattice_violation

from _strategies import graphs, petersen


def brute_claws(G):
    out = set()
    for c in range(G.n):
        for ends in combinations(G.neighbors(c), 3):
            if not any(G.has_edge(a, b) for a, b in combinations(ends, 2)):
                out.add((c, tuple(sorted(ends))))
    return out


def test_petersen_claws():
    # every vertex has three pairwise non-adjacent neighbours: one claw per centre
    claws = list(find_claws(petersen()))
    assert len(claws) == 10
    p = class_profile(petersen())
    assert not (p.claw_free or p.one_heavy or p.two_heavy or p.claw_heavy)
    assert p.failing_witness["one_heavy"] == claws[0]
    st = claw_status(petersen(), claws[0])
    assert st.light and st.o_light and st.max_pair_degree_sum == 6


def test_star_profile():
    K13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert list(find_claws(K13)) == [Claw(0, (1, 2, 3))]
    p = class_profile(K13)
    # ends have degree 1 < 2, pair sums 2 < 4
    assert not p.claw_free and not p.one_heavy and not p.claw_heavy


def test_claw_status_rejects_non_claws():
    K4 = Graph.complete(4)
    with pytest.raises(ValueError):
        claw_status(K4, Claw(0, (1, 2, 3)))
    with pytest.raises(ValueError):
        claw_status(K4, Claw(0, (0, 2, 3)))


@given(graphs(max_n=8))
def test_claw_enumeration_matches_brute_force(G):
    assert {(c.center, c.ends) for c in find_claws(G)} == brute_claws(G)


@given(graphs(max_n=8))
def test_profile_lattice_and_shortcuts(G):
    p = class_profile(G)
    assert lattice_violation(p) is None
    assert p.claw_heavy == is_claw_heavy(G)
    assert p.one_heavy == is_one_heavy(G)
    for flag, claw in p.failing_witness.items():
        st = claw_status(G, claw)
        if flag == "one_heavy":
            assert st.light
        elif flag == "two_heavy":
            assert st.heavy_end_count < 2
        elif flag == "claw_heavy":
            assert st.o_light


def test_cycle_anchors():
    C5, C6 = Graph.cycle(5), Graph.cycle(6)
    dh = is_distance_hereditary(C5)
    assert not dh and dh.witness["d_H"] - dh.witness["d_G"] == 1
    assert is_almost_distance_hereditary(C5)
    adh = is_almost_distance_hereditary(C6)
    assert not adh
    assert adh.witness["d_H"] - adh.witness["d_G"] == 2
    assert recheck_stretch(C6, adh.witness) == 2


def test_complete_and_tree_are_dh():
    assert is_distance_hereditary(Graph.complete(6))
    assert is_distance_hereditary(Graph.path(6))


def test_disconnected_rejected():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        is_almost_distance_hereditary(G)
    with pytest.raises(ValueError):
        adh_oracle(G)


@given(graphs(min_n=2, max_n=8))
def test_fast_adh_matches_subset_oracle(G):
    if not is_connected(G):
        return
    dh, adh = is_distance_hereditary(G), is_almost_distance_hereditary(G)
    assert bool(adh) == bool(adh_oracle(G))
    assert bool(dh) == bool(adh_oracle(G, slack=0))
    if dh:
        assert adh
    for verdict, slack in ((dh, 0), (adh, 1)):
        if not verdict:
            assert recheck_stretch(G, verdict.witness) > slack
