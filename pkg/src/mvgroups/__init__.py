"""Exact arithmetic for finite multivalued groups.

Build multivalued groups from automorphism actions on finite groups or
from strongly regular graph parameters, verify every defining axiom,
and decide for order-3 groups whether they arise (up to isomorphism)
from a coset construction.
"""

from .algebra import (
    ActionGroup,
    Automorphism,
    FiniteField,
    FiniteGroup,
    OrbitPartition,
    additive_group,
    close_action,
    coset_group,
    cyclic_group,
    is_prime_power,
    is_sum_of_two_squares,
    make_elementary_abelian,
    make_field,
    mult_order,
    multiplier_automorphism,
    orbits,
)
from .classify import (
    FamilyDescriptor,
    Verdict,
    classify_order3,
    collisions,
    derive_params,
    enumerate_families,
    match_params,
)
from .core import (
    AxiomReport,
    Multiset,
    MultivaluedGroup,
    Signature,
    are_isomorphic,
    build_type1,
    build_type2,
    build_xk,
    check_reciprocity,
    scale,
    signature,
    verify_all,
    verify_axioms,
    verify_involutive,
)
from .errors import AxiomError, CapError, InputError, InternalError, MvgError
from .srg import (
    DirectedGraph,
    Graph,
    IntersectionNumbers,
    SrgParams,
    affine_polar,
    affine_polar_plus_complement,
    alternating_forms_graph,
    bilinear_forms_graph,
    cayley_graph,
    clique_union,
    complement,
    complement_params,
    grid_graph,
    intersection_numbers,
    mvgroup_from_params,
    paley_graph,
    paley_tournament,
    srg_check,
    vanlint_schrijver,
)

__version__ = "0.1.0"

__all__ = [
    "ActionGroup",
    "Automorphism",
    "AxiomError",
    "AxiomReport",
    "CapError",
    "DirectedGraph",
    "FamilyDescriptor",
    "FiniteField",
    "FiniteGroup",
    "Graph",
    "InputError",
    "InternalError",
    "IntersectionNumbers",
    "Multiset",
    "MultivaluedGroup",
    "MvgError",
    "OrbitPartition",
    "Signature",
    "SrgParams",
    "Verdict",
    "additive_group",
    "affine_polar",
    "affine_polar_plus_complement",
    "alternating_forms_graph",
    "are_isomorphic",
    "bilinear_forms_graph",
    "build_type1",
    "build_type2",
    "build_xk",
    "cayley_graph",
    "check_reciprocity",
    "classify_order3",
    "clique_union",
    "close_action",
    "collisions",
    "complement",
    "complement_params",
    "coset_group",
    "cyclic_group",
    "derive_params",
    "enumerate_families",
    "grid_graph",
    "intersection_numbers",
    "is_prime_power",
    "is_sum_of_two_squares",
    "make_elementary_abelian",
    "make_field",
    "match_params",
    "mult_order",
    "multiplier_automorphism",
    "mvgroup_from_params",
    "orbits",
    "paley_graph",
    "paley_tournament",
    "scale",
    "signature",
    "srg_check",
    "vanlint_schrijver",
    "verify_all",
    "verify_axioms",
    "verify_involutive",
]
