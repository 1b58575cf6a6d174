import math

import numpy as np
from scipy.special import ndtr

from istanbul_pricer.exceptions import DomainError

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def pdf(x):
    """
    standard normal density, scalar or array
    :param x:
    :return:
    """
    return INV_SQRT_2PI * np.exp(-0.5 * np.square(x))


def cdf(x):
    """
    standard normal distribution function
    :param x:
    :return:
    """
    return ndtr(x)


def sf(x):
    """
    upper tail 1 - cdf(x), evaluated without cancellation
    :param x:
    :return:
    """
    return ndtr(-np.asarray(x))


def std_normal(x: float):
    """
    density and distribution function at a finite point
    :param x:
    :return: (pdf, cdf)
    """
    if not math.isfinite(x):
        raise DomainError(f'std_normal needs a finite argument, got {x}')
    return float(pdf(x)), float(cdf(x))
