"""
Exact Hecke algebras of the complex reflection groups G4 and G(r,1,2).

Elements live over ``Z[xi]``, the ring of the order-relation parameters.
The package builds reduced bases with their straightening tables,
double-coset graphs, and integral bases of generator centralizers and of
the centre, and checks the published tables for G4 and G(4,1,2).
"""

from .basis import ReducedBasis, build_basis, build_table, get_basis, straighten
from .centre import centralizer_basis, class_element, rebase, relations_additive, repivot, solve_relations
from .cosetgraph import build_graph, emit_dot, is_stable
from .element import HeckeElement
from .groups import GroupData, GroupSpec, build_group, get_group, parse_group_spec
from .hecke import commutator, generator_power, h_mul, specialize, support_cosets
from .poly import ParamSpec, Poly

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "ParamSpec",
    "GroupSpec",
    "GroupData",
    "build_group",
    "get_group",
    "parse_group_spec",
    "ReducedBasis",
    "build_basis",
    "get_basis",
    "build_table",
    "straighten",
    "HeckeElement",
    "h_mul",
    "commutator",
    "generator_power",
    "specialize",
    "support_cosets",
    "build_graph",
    "is_stable",
    "emit_dot",
    "centralizer_basis",
    "class_element",
    "solve_relations",
    "relations_additive",
    "rebase",
    "repivot",
]
