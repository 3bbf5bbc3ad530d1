"""Exact topology of the real singularities ``conj(xy)(x^p + y^q) + z^r``.

Seifert invariants of the link, the star-shaped plumbing graph, the maximal
splice diagram, the canonical class of the resolution (computed two
independent ways) and the mod-12 smoothing obstruction.
"""
from .analysis import Analysis, analyze
from .canonical import canonical_class, chi_vector, classify, solve_D, splice_D
from .errors import InternalConsistencyError, InvalidParameters, SeifertConstructionError
from .exact import gcd, hj_eval, hj_expand, modular_inverse_solve
from .milnor import chi_fibre, chi_fibre_curve, congruence, residue_table
from .plumbing import (
    build_star_graph,
    chi_resolution,
    graph_determinant,
    intersection_matrix,
    is_negative_definite,
)
from .seifert import family_params, seifert_data, seifert_data_complex
from .splice import edge_determinants, inverse_entry, splice_weights

__version__ = "0.1.0"

__all__ = [
    "Analysis", "analyze", "canonical_class", "chi_vector", "classify", "solve_D",
    "splice_D", "InternalConsistencyError", "InvalidParameters", "SeifertConstructionError",
    "gcd", "hj_eval", "hj_expand", "modular_inverse_solve", "chi_fibre", "chi_fibre_curve",
    "congruence", "residue_table", "build_star_graph", "chi_resolution", "graph_determinant",
    "intersection_matrix", "is_negative_definite", "family_params", "seifert_data",
    "seifert_data_complex", "edge_determinants", "inverse_entry", "splice_weights",
]
