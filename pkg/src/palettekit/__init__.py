"""Palette calculus for the uniform Turan density of 3-uniform hypergraphs."""

from .coloring import (
    Hypergraph,
    OrderedHypergraph,
    PairColoring,
    check_certificate,
    colorable,
    min_induced_density,
    ordered_colorable,
    random_palette_hypergraph,
)
from .conditions import (
    SeparationQuery,
    SeparationVerdict,
    density_bound_481,
    family_condition,
    multi_condition,
    single_condition,
    verify_481,
    witness_search,
)
from .homomorphism import Homomorphism, compose, count_homs, exists_hom
from .lagrangian import brute_force_lagrangian, gradient, lagrangian, objective
from .named import P_3T, P_4_81, P_LM, P_TWO_COLOR
from .palette import (
    ColorRoles,
    Palette,
    classify_roles,
    density,
    find_isomorphism,
    inverse,
    product,
    symmetrize,
    validate,
)

__version__ = "0.1.0"
