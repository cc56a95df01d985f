"""Balanced s-t connectivity: decision, short witnesses, and an exhaustive oracle."""

__version__ = "0.1.0"

from .diophantine import ReducedSolution, ReductionProblem, reduce_coefficients, solve_bounded
from .graph import (
    ClassifiedView,
    DirectedGraph,
    EdgeClass,
    Instance,
    Walk,
    classify_edge,
    parse_instance,
    serialize_instance,
    walk_imbalance,
)
from .instances import gen_degenerate, gen_figure1, gen_random
from .oracle import shortest_balanced, shortest_balanced_walk
from .solver import Answer, Verdict, compute_potentials, cycle_gcd, decide_balanced
from .witness import build_witness, decompose_walk, rebalance_existing, verify_walk
from .estimator import BalancedConnectivity
