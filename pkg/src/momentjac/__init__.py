"""Complex moment mapping of real polynomials and its Jacobian."""

from .errors import InputError, NumericalFailure, RouteMismatch
from .jacobian import (
    cross_check,
    jacobian_det_direct,
    jacobian_det_roots,
    jacobian_det_toeplitz,
    jacobian_det_ullemar,
    jacobian_matrix,
    jacobian_sq_resultant,
)
from .moments import MomentVector, cauchy_series, moment_map
from .polycore import LaurentSeries, RatPoly
from .roots import RootSet, find_roots

__version__ = "0.1.0"
