"""Decide whether a graph is a local or global amoeba.

A feasible edge replacement of G removes an edge and adds a non-edge so that
the result is isomorphic to G.  The permutations realising these replacements
generate a group S_G; G is a local amoeba when S_G is the full symmetric
group, and a global amoeba when G plus one isolated vertex is local.
"""

from .classifier import (AmoebaReport, classify, degree_decrement_check, global_degree_prefilter,
                         is_global_amoeba, is_local_amoeba, local_degree_prefilter,
                         verify_extremal_bounds)
from .errors import BudgetExceeded, CapExceeded, InconsistencyError
from .graph import (Graph, add_isolates, apply_permutation, complement, disjoint_union,
                    graph_from_edge_list)
from .graph6 import from_graph6, to_graph6
from .group import PermGroup, build_group, symmetric_group
from .iso import automorphism_generators, automorphisms, canonical_form, enumerate_isomorphisms
from .perm import Permutation
from .replacements import (EdgeReplacement, amoeba_group, feasible_replacements,
                           replacement_coset)

__all__ = [
    "AmoebaReport", "BudgetExceeded", "CapExceeded", "EdgeReplacement", "Graph",
    "InconsistencyError", "PermGroup", "Permutation", "add_isolates", "amoeba_group",
    "apply_permutation", "automorphism_generators", "automorphisms", "build_group",
    "canonical_form", "classify", "complement", "degree_decrement_check", "disjoint_union",
    "enumerate_isomorphisms", "feasible_replacements", "from_graph6", "global_degree_prefilter",
    "graph_from_edge_list", "is_global_amoeba", "is_local_amoeba", "local_degree_prefilter",
    "replacement_coset", "symmetric_group", "to_graph6", "verify_extremal_bounds",
]
