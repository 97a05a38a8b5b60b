"""Poincare series of SL2-invariants of binary forms via a multi-modular heuristic."""

__version__ = "0.1.0"

from .actors import Parameters, Parity, build_r, derive_parameters, eval_p, eval_phi, eval_q  # noqa: E402
from .alpha import AlphaPolynomial, SolverConfig, alpha_at, alpha_mod_prime, compute_alpha, validate_alpha  # noqa: E402
from .assemble import CoefficientTable, PoincareRational, assemble, half_table, structural_checks  # noqa: E402
from .ffield import PAPER_PRIMES, PrimeField, PrimeSet, crt_lift, interpolate, sample_distinct, solve_linear  # noqa: E402
from .intpoly import IntPoly  # noqa: E402
from .oracle import certify, dimension_table, expand_series, howe_coefficient, invariant_dim  # noqa: E402

__all__ = [
    "AlphaPolynomial", "CoefficientTable", "IntPoly", "PAPER_PRIMES", "Parameters", "Parity",
    "PoincareRational", "PrimeField", "PrimeSet", "SolverConfig", "alpha_at", "alpha_mod_prime",
    "assemble", "build_r", "certify", "compute_alpha", "crt_lift", "derive_parameters",
    "dimension_table", "eval_p", "eval_phi", "eval_q", "expand_series", "half_table",
    "howe_coefficient", "interpolate", "invariant_dim", "sample_distinct", "solve_linear",
    "structural_checks", "validate_alpha",
]
