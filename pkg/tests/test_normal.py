import math

import numpy as np
import pytest

from istanbul_pricer.exceptions import DomainError
from istanbul_pricer.utils.normal import pdf, cdf, sf, std_normal, INV_SQRT_2PI


def test_values_at_zero():
    density, probability = std_normal(0.0)
    assert density == pytest.approx(INV_SQRT_2PI)
    assert probability == pytest.approx(0.5)


def test_symmetry():
    x = np.linspace(-8, 8, 33)
    assert np.allclose(cdf(x) + cdf(-x), 1.0)
    assert np.allclose(pdf(x), pdf(-x))


def test_upper_tail_keeps_precision():
    # 1 - cdf(37) is 0 in double precision, the tail itself is about 5.7e-300
    x = 37.0
    assert 1 - float(cdf(x)) == 0.0
    asymptotic = float(pdf(x)) / x * (1 - 1 / x ** 2 + 3 / x ** 4)
    assert float(sf(x)) == pytest.approx(asymptotic, rel=1e-6)
    assert float(sf(10.0)) == pytest.approx(7.619853024160527e-24, rel=1e-12)


def test_known_quantile():
    assert float(cdf(1.959963984540054)) == pytest.approx(0.975, rel=1e-14)


def test_non_finite_argument():
    with pytest.raises(DomainError):
        std_normal(math.inf)
    with pytest.raises(DomainError):
        std_normal(math.nan)
