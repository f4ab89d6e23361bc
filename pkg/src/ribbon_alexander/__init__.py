"""Alexander polynomials of ribbon knots computed from ribbon graphs and ribbon diagrams."""
from .alexander import AlexanderResult, alexander, check_invariants, conway_alexander, half_alexander
from .laurent import LaurentPoly, PolyMatrix, det, unit_equivalent
from .reductions import ReductionStep, find_reductions, reduce_fully
from .ribbon_diagram import RibbonDiagram, build_faces, ribbon_matrix_direct, to_ribbon_graph
from .ribbon_graph import RibbonGraph, RibbonMatrix, canonical_serialize, parse_graph, path, ribbon_matrix, validate
from .seifert_oracle import alexander_from_seifert, seifert_matrix, verify_l_independence

__version__ = "0.1.0"

__all__ = [
    "AlexanderResult",
    "LaurentPoly",
    "PolyMatrix",
    "ReductionStep",
    "RibbonDiagram",
    "RibbonGraph",
    "RibbonMatrix",
    "alexander",
    "alexander_from_seifert",
    "build_faces",
    "canonical_serialize",
    "check_invariants",
    "conway_alexander",
    "det",
    "find_reductions",
    "half_alexander",
    "parse_graph",
    "path",
    "reduce_fully",
    "ribbon_matrix",
    "ribbon_matrix_direct",
    "seifert_matrix",
    "to_ribbon_graph",
    "unit_equivalent",
    "validate",
    "verify_l_independence",
]
