"""Hook immanants and hook immanantal polynomials of beta*D + gamma*A.

Exact rational arithmetic throughout.  The brute-force permutation sum in
:mod:`hookimm.oracle` is the reference; :mod:`hookimm.recursion` implements
the vertex, edge and arc deletion recursions.
"""

from .algebra import Poly, format_rational, poly_add, poly_eval, poly_mul, to_rational
from .errors import GraphFormatError, SizeLimitError
from .graphs import (
    CycleRecord,
    Digraph,
    Graph,
    MatrixParams,
    RationalMatrix,
    build_H,
    cycles_through_edge,
    cycles_through_vertex,
    delete_arc,
    delete_edge,
    dicycles_through_arc,
    dicycles_through_vertex,
    is_bipartite,
    parse_graph,
    parse_graph6,
    principal_submatrix,
)
from .oracle import (
    determinant_crosscheck,
    hook_poly_bruteforce,
    hook_polys_bruteforce,
    immanant_bruteforce,
    permanent_crosscheck,
)
from .recursion import (
    EvalContext,
    dk_edge,
    dk_general,
    dk_vertex,
    phi_edge,
    phi_general,
    phi_vertex,
    preset_poly,
)
from .symgroup import cycle_type, hook_character, permutations

__all__ = [
    "CycleRecord",
    "Digraph",
    "EvalContext",
    "Graph",
    "GraphFormatError",
    "MatrixParams",
    "Poly",
    "RationalMatrix",
    "SizeLimitError",
    "build_H",
    "cycle_type",
    "cycles_through_edge",
    "cycles_through_vertex",
    "delete_arc",
    "delete_edge",
    "determinant_crosscheck",
    "dicycles_through_arc",
    "dicycles_through_vertex",
    "dk_edge",
    "dk_general",
    "dk_vertex",
    "format_rational",
    "hook_character",
    "hook_poly_bruteforce",
    "hook_polys_bruteforce",
    "immanant_bruteforce",
    "is_bipartite",
    "parse_graph",
    "parse_graph6",
    "permanent_crosscheck",
    "permutations",
    "phi_edge",
    "phi_general",
    "phi_vertex",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "preset_poly",
    "principal_submatrix",
    "to_rational",
]
