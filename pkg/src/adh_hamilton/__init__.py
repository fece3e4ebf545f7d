"""Hamilton cycles in almost distance-hereditary graphs: predicates, an
extension engine with certificates, brute-force oracles and sweeps."""

from .graph import Graph, OrientedCycle, Verdict, emit_graph6, is_k_connected, parse_graph6
from .classes import class_profile, is_almost_distance_hereditary, is_distance_hereditary
from .ore import lift_o_cycle, is_o_cycle
from .engine import extend_cycle, find_hamilton_cycle
from .oracle import adh_oracle, hamiltonian_oracle, longest_cycle_oracle

__version__ = "0.1.0"
