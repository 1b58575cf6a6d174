import math
from typing import Callable, Optional, Sequence

from loguru import logger
from scipy.integrate import quad

from istanbul_pricer import settings
from istanbul_pricer.exceptions import AccuracyError, DomainError
from istanbul_pricer.schemas.result import QuadratureResult


def integrate_1d(f: Callable[[float], float], lo: float, hi: float,
                 abs_tol: float = settings.QUAD_ABS_TOL,
                 rel_tol: float = settings.QUAD_REL_TOL,
                 limit: int = settings.QUAD_LIMIT,
                 points: Optional[Sequence[float]] = None) -> QuadratureResult:
    """
    adaptive Gauss-Kronrod integration of f over (lo, hi). The open rule never
    evaluates the endpoints, so integrable endpoint singularities are allowed;
    infinite bounds are mapped to a finite domain.
    :param f: real function of one real
    :param lo: lower bound
    :param hi: upper bound
    :param abs_tol: absolute tolerance
    :param rel_tol: relative tolerance
    :param limit: maximum number of subintervals
    :param points: interior break points, finite bounds only
    :return: QuadratureResult
    """
    if not lo < hi:
        raise DomainError(f'integration bounds must satisfy lo < hi, got ({lo}, {hi})')
    if abs_tol < 0 or rel_tol <= 0:
        raise DomainError('tolerances must be rel_tol > 0 and abs_tol >= 0')
    options = {'epsabs': abs_tol, 'epsrel': rel_tol, 'limit': limit, 'full_output': 1}
    if points and math.isfinite(lo) and math.isfinite(hi):
        options['points'] = [p for p in points if lo < p < hi] or None
    result = quad(f, lo, hi, **options)
    value, abs_error, info = result[0], result[1], result[2]
    bound = max(abs_tol, rel_tol * abs(value))
    if len(result) > 3 or abs_error > bound:
        message = result[3] if len(result) > 3 else 'error estimate above tolerance'
        raise AccuracyError(f'quadrature on ({lo}, {hi}) did not converge: {message}',
                            estimate=value, error_bound=abs_error)
    logger.trace(f'quadrature on ({lo}, {hi}) used {info["neval"]} evaluations')
    return QuadratureResult(value=value, abs_error_estimate=abs_error, evaluations=info['neval'])
