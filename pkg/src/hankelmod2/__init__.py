"""Exact Hankel determinants of the Catalan-mod-2 family.

Library layout:
  seq        -- binary-digit counters and sign sequences
  exactring  -- Laurent polynomials, integer polynomials, truncated series
  hankel     -- matrix construction, determinant oracles, nimble solver,
                decompositions, orthogonal polynomials
  closedform -- every closed-form / recursive determinant evaluator
  contfrac   -- continued-fraction expansion and identity checks
  cli        -- table / verify / bench / det command line
"""

from .exactring import LaurentPoly, TruncatedSeries, UniPoly
from .hankel import HankelMatrix, SequenceRule, SignedPermutation, build_matrix, det_oracle
from .closedform import (
    D_sign,
    T_int,
    d_shift_generic,
    d_shift_int,
    d_sign,
    generic_D,
    generic_T,
    generic_d,
    generic_t,
)

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "UniPoly",
    "HankelMatrix",
    "SequenceRule",
    "SignedPermutation",
    "build_matrix",
    "det_oracle",
    "d_sign",
    "D_sign",
    "T_int",
    "d_shift_int",
    "d_shift_generic",
    "generic_d",
    "generic_D",
    "generic_T",
    "generic_t",
]

__version__ = "0.1.0"
