"""Combinatorial models of the associahedron and its relatives.

Four face-poset models and the machine-checked maps between them:
bracketings of a word, painted trees and formal expressions, their
collapsed variant, and design tubings of a path.
"""

from .associahedron import (
    Bracketing,
    all_bracketings,
    build_K,
    degeneracy,
    embed,
    enlarged_complex,
    facet_signature,
    loday_realization,
    right_comb,
    verify_loday,
    verify_operator_identities,
    verify_Q,
    verify_theorem_A,
)
from .cubeahedron import (
    build_CP,
    compatible,
    enumerate_design_tubings,
    tubing_to_expression,
    verify_composed,
    verify_cubeahedron_iso,
)
from .multiplihedron import (
    Phi,
    build_frakJ,
    build_Jprime,
    build_Jtree,
    collapse_codomain,
    collapse_edges,
    enumerate_expressions,
    enumerate_flat_expressions,
    enumerate_painted_trees,
    expr_text,
    phi_inverse,
    phi_map,
    verify_phi,
    verify_Phi,
)
from .poset import (
    CellComplex,
    FacePoset,
    Poset,
    Report,
    boundary_euler_characteristic,
    check_order_iso,
    cone_complex,
    f_vector,
    is_simple,
    product_complex,
    search_iso,
    to_dot,
    union_complex,
)

__version__ = "0.1.0"

__all__ = [
    "Bracketing",
    "all_bracketings",
    "build_K",
    "degeneracy",
    "embed",
    "enlarged_complex",
    "facet_signature",
    "loday_realization",
    "right_comb",
    "verify_loday",
    "verify_operator_identities",
    "verify_Q",
    "verify_theorem_A",
    "build_CP",
    "compatible",
    "enumerate_design_tubings",
    "tubing_to_expression",
    "verify_composed",
    "verify_cubeahedron_iso",
    "Phi",
    "build_frakJ",
    "build_Jprime",
    "build_Jtree",
    "collapse_codomain",
    "collapse_edges",
    "enumerate_expressions",
    "enumerate_flat_expressions",
    "enumerate_painted_trees",
    "expr_text",
    "phi_inverse",
    "phi_map",
    "verify_phi",
    "verify_Phi",
    "CellComplex",
    "FacePoset",
    "Poset",
    "Report",
    "boundary_euler_characteristic",
    "check_order_iso",
    "cone_complex",
    "f_vector",
    "is_simple",
    "product_complex",
    "search_iso",
    "to_dot",
    "union_complex",
]
