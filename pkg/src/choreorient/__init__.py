"""EF1 and EFX0 orientations of graphs of chores."""

from .ef1 import ef1_structural_condition, solve_ef1
from .efx import orient_in_degree_one, solve as solve_efx0, solve_objective, structural_efx_condition
from .hardness import (
    PartitionInstance,
    RandomParams,
    gen_planted,
    gen_random,
    gen_three_vertex,
    gen_two_vertex,
    has_equipartition,
)
from .instance import (
    ChoreInstance,
    Edge,
    EdgeClass,
    Orientation,
    bundle_utility,
    classify_edge,
    figure1_instance,
    load_instance,
    make_instance,
    negative_components,
    subdivide,
)
from .oracle import Allocation, Criterion, check_ef1, check_efx0, enumerate_orientations
from .pdcover import PdInstance, find_cover, verify_cover

__all__ = [
    "Allocation",
    "ChoreInstance",
    "Criterion",
    "Edge",
    "EdgeClass",
    "Orientation",
    "PartitionInstance",
    "PdInstance",
    "RandomParams",
    "bundle_utility",
    "check_ef1",
    "check_efx0",
    "classify_edge",
    "ef1_structural_condition",
    "enumerate_orientations",
    "figure1_instance",
    "find_cover",
    "gen_planted",
    "gen_random",
    "gen_three_vertex",
    "gen_two_vertex",
    "has_equipartition",
    "load_instance",
    "make_instance",
    "negative_components",
    "orient_in_degree_one",
    "solve_ef1",
    "solve_efx0",
    "solve_objective",
    "structural_efx_condition",
    "subdivide",
    "verify_cover",
]
