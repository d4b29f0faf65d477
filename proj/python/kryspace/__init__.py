"""Krylov subspace solvers and structural diagnostics on truncated Hilbert spaces.

Vectors are NumPy complex arrays in the storage coordinates of the operator's
space: canonical coefficients for sequence spaces, grid samples for
``volterra``.
"""

from ._core import *  # noqa: F401,F403
from ._core import NumericalFailure, UnsupportedOperator, gmres_solve, run_experiment

__version__ = "0.1.0"
