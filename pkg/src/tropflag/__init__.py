"""Positivity of valuated flag matroids of type A.

Exact min-plus arithmetic, flag Dressian membership, the complete
classification at rank (1, n-1), Bruhat interval polytopes, flag gammoids and
Puiseux realizations.
"""

from __future__ import annotations

from .flag import (FlagError, FlagValuatedMatroid, PlueckerPair, check_necessary,
                   enumerate_pluecker_pairs, lambda_values, validate_flag)
from .hollow import (HollowError, build_realization_matrix, classify, hollow_flag,
                     subdivision_cells, symbol_sequence)
from .kernels import BACKEND
from .matroid import MatroidError, ValuatedMatroid, validate_plucker
from .trop import INF, trop

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FlagError", "FlagValuatedMatroid", "HollowError", "INF", "MatroidError",
    "PlueckerPair", "ValuatedMatroid", "build_realization_matrix", "check_necessary", "classify",
    "enumerate_pluecker_pairs", "hollow_flag", "lambda_values", "subdivision_cells",
    "symbol_sequence", "trop", "validate_flag", "validate_plucker",
]
