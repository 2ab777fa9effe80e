"""Graph automorphism groups, transitivity predicates and symmetry verdicts."""

from .automorphisms import (
    DEFAULT_VERTEX_CAP,
    GraphGroup,
    GraphTooLarge,
    Refiner,
    are_isomorphic,
    automorphism_group,
    induced_action,
)
from .graph import GraphFormatError, SimpleGraph, complete_bipartite, cycle_graph, petersen_graph
from .symmetry import (
    NotSymmetric,
    Symmetry,
    TutteReport,
    classify_symmetry,
    edge_orbits,
    is_arc_transitive,
    is_biprimitive,
    is_edge_transitive,
    is_vertex_transitive,
    part_stabilizer,
    tutte_stabilizer_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
