"""Pisot number toolkit: lattice-based search for Pisot generators of
totally real Galois fields, and fast nearest-integer powers of Pisot numbers
(exact, modular, and as O(log n) straight-line programs)."""

from ._backend import BACKEND
from .algebraic import (
    EmbeddingMatrix,
    FieldSpec,
    IntPoly,
    MinPolyInfo,
    analyze_minpoly,
    cyclotomic_embeddings,
    embeddings_for,
    eval_combination,
    explicit_embeddings,
    minimal_polynomial,
    poly_roots,
)
from .lattice import IntLattice, LLLResult, check_reduced, lll_reduce, svp_bruteforce
from .pisotsearch import (
    PisotCandidate,
    ScaledLatticeBasis,
    SearchParams,
    build_scaled_lattice,
    compute_scale_P,
    find_pisot,
    minkowski_bound,
    verify_pisot,
)
from .powtrace import CompanionMatrix, companion_matrix, matpow, nearest_power, nearest_power_mod
from .slp import SLP, emit_power_slp, format_slp, parse_slp, slp_eval, slp_for_constant, slp_length

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CompanionMatrix",
    "EmbeddingMatrix",
    "FieldSpec",
    "IntLattice",
    "IntPoly",
    "LLLResult",
    "MinPolyInfo",
    "PisotCandidate",
    "SLP",
    "ScaledLatticeBasis",
    "SearchParams",
    "analyze_minpoly",
    "build_scaled_lattice",
    "check_reduced",
    "companion_matrix",
    "compute_scale_P",
    "cyclotomic_embeddings",
    "embeddings_for",
    "emit_power_slp",
    "eval_combination",
    "explicit_embeddings",
    "find_pisot",
    "format_slp",
    "lll_reduce",
    "matpow",
    "minimal_polynomial",
    "minkowski_bound",
    "nearest_power",
    "nearest_power_mod",
    "parse_slp",
    "poly_roots",
    "slp_eval",
    "slp_for_constant",
    "slp_length",
    "svp_bruteforce",
    "verify_pisot",
]
