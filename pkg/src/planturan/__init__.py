"""Planar graph workbench: rotation-system embeddings, circuit graphs,
near-triangulation and theta extraction, extremal constructions and
exhaustive planar Turán numbers."""

from .budget import Budget, BudgetExceeded
from .constructions import (
    cube,
    cycle_graph,
    figure2_fixture,
    kleetope,
    sharp_chain,
    stacked_triangulation,
    substitute,
    substitute_with_copies,
    tetrahedron,
    wheel,
)
from .embedding import (
    CircuitGraph,
    CircuitGraphError,
    EmbeddingError,
    PlaneGraph,
    deficiency_m,
    interior_of_cycle,
    is_near_triangulation,
    parse_plg,
    serialize_plg,
    trace_faces,
    validate_circuit_graph,
)
from .patterns import (
    CircumferenceLess,
    ExactCycle,
    Pattern,
    Theta,
    ThetaMember,
    ThetaWitness,
    circumference,
    girth,
    has_cycle_of_length,
    has_theta,
    matches,
    parse_pattern,
)
from .search import SearchReport, check_bound, enumerate_planar, ex_p
from .theta_extract import DichotomyViolated, NoLongCycle, find_theta
from .tri_extract import (
    InternalInvariantBroken,
    NtWitness,
    PreconditionViolated,
    find_near_triangulation,
    oracle_near_triangulation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
