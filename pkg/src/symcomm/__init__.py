"""Exact computations with commuting pairs in classical symmetric Lie algebras."""

__version__ = "0.1.0"

from .errors import (ArgumentError, ClassificationError, InternalError, NotCommutingError,  # noqa: E402
                     SymcommError, UnsupportedFamilyError)
from .linalg import Matrix, Polynomial, QI, Subspace, intersect, kernel, rank  # noqa: E402
from .pairs import Family, SymmetricPair, build_pair, cartan_subspace, dim_m, symmetric_rank  # noqa: E402
from .analysis import PairReport, classify_pair, irregularity_number, sample_commuting_pair  # noqa: E402

__all__ = [
    "__version__", "ArgumentError", "ClassificationError", "InternalError", "NotCommutingError",
    "SymcommError", "UnsupportedFamilyError", "Matrix", "Polynomial", "QI", "Subspace", "intersect",
    "kernel", "rank", "Family", "SymmetricPair", "build_pair", "cartan_subspace", "dim_m",
    "symmetric_rank", "PairReport", "classify_pair", "irregularity_number", "sample_commuting_pair",
]
