"""
closed forms of the Gaussian time integrals behind the approximation: the
A, B, C integrals, their second-order expansion in beta, the indefinite
integrals they are assembled from and the two definite integrals used to fix
the integration constants
"""
import math

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError
from istanbul_pricer.schemas.kernel import KernelArgs
from istanbul_pricer.schemas.result import QuadratureResult
from istanbul_pricer.utils.normal import pdf, cdf, sf
from istanbul_pricer.utils.quadrature import integrate_1d

A1, A2, A3, A4 = 'A1', 'A2', 'A3', 'A4'
B1, B2 = 'B1', 'B2'

# exp(-700) is the smallest factor kept before underflow
UNDERFLOW_EXPONENT = 700.0

# power of t in each defining integral
POWERS = {'A': -1.5, 'B': -0.5, 'C': 0.5}


def abc_integrals(args: KernelArgs):
    """
    closed forms of the un-normalized integrals A, B and C at beta = 0
    :param args:
    :return: (A, B, C)
    """
    alpha, gamma, horizon = args.alpha, args.gamma, args.horizon
    d = args.d
    root_2gamma = math.sqrt(2 * gamma)
    density, upper = float(pdf(d)), float(sf(d))
    a_value = math.pi * math.sqrt(2 / (horizon * gamma)) * density
    b_value = 2 * math.pi * upper
    # (2g - a^2 - T) Phi(d) - 2g + T + a^2 rewritten on the upper tail
    c_value = math.pi * ((alpha ** 2 + horizon - 2 * gamma) * upper
                         + math.sqrt(horizon) * (root_2gamma - alpha) * density)
    return a_value, b_value, c_value


def lemma1_kernel(args: KernelArgs):
    """
    second-order expansion in beta of the time integral, returned with the 1/pi
    normalization:
        (1/pi) int ... dt ~ (A - B beta + C beta^2 / 2) / pi
    :param args:
    :return:
    """
    a_value, b_value, c_value = abc_integrals(args)
    beta = args.beta
    return (a_value - b_value * beta + c_value * beta ** 2 / 2) / math.pi


def kernel_integral(args: KernelArgs, kind: str = 'A', abs_tol=1e-14, rel_tol=1e-10):
    """
    direct quadrature of a defining integral, A, B or C, with the beta factor
    exp(-beta t) included. t = T sin^2(theta) removes the square-root endpoint
    singularities; the piece where gamma / t exceeds the underflow exponent
    contributes nothing and is skipped.
    :param args:
    :param kind: A, B or C
    :param abs_tol:
    :param rel_tol:
    :return: QuadratureResult
    """
    if kind not in POWERS:
        raise DomainError(f'unknown kernel integral {kind}')
    power = POWERS[kind]
    alpha_sq, beta, gamma, horizon = args.alpha ** 2, args.beta, args.gamma, args.horizon
    scale = 2 * horizon ** (power + 0.5)

    def integrand(theta):
        s2 = math.sin(theta) ** 2
        c2 = 1.0 - s2
        t = horizon * s2
        if t <= 0:
            return 0.0
        exponent = -gamma / t - beta * t
        if alpha_sq > 0:
            if c2 <= 0:
                return 0.0
            exponent -= alpha_sq / (2 * horizon * c2)
        return scale * s2 ** (power + 0.5) * math.exp(exponent)

    t_cut = gamma / UNDERFLOW_EXPONENT
    lo = math.asin(math.sqrt(t_cut / horizon)) if t_cut < horizon else math.pi / 2
    if lo >= math.pi / 2:
        return QuadratureResult(value=0.0, abs_error_estimate=0.0, evaluations=0)
    return integrate_1d(integrand, lo, math.pi / 2, abs_tol=abs_tol, rel_tol=rel_tol,
                        limit=settings.QUAD_LIMIT)


def appendixA_antiderivative(kind: str, params: dict, x: float):
    """
    right-hand side of the indefinite Gaussian integral identities
        A1: int x^(-3/2) exp(-a x - h / (2x)) dx,           a >= 0, h > 0, x > 0
        A2: int Phi(a x + h) dx,                             a != 0
        A3: int e^(c x) (d x^2 + k) (1 - Phi(a x + h)) dx,   a, c != 0
        A4: int e^(c x) (w x + l) phi(a x + h) dx,           a != 0
    :param kind: one of A1, A2, A3, A4
    :param params: coefficients named as in the identities
    :param x:
    :return:
    """
    a = params.get('a', 0.0)
    h = params.get('h', 0.0)
    if kind == A1:
        if a < 0 or h <= 0:
            raise DomainError('A1 needs a >= 0 and h > 0')
        if x <= 0:
            raise DomainError('A1 is defined for x > 0')
        root = math.sqrt(2 * a * h)
        factor = math.sqrt(2 * math.pi / h)
        u = math.sqrt(2 * a * x)
        v = math.sqrt(h / x)
        return factor * (math.exp(-root) * cdf(u - v) + math.exp(root) * cdf(-u - v))
    if a == 0:
        raise DomainError(f'{kind} needs a != 0')
    y = a * x + h
    if kind == A2:
        return (x + h / a) * cdf(y) + pdf(y) / a
    c = params.get('c', 0.0)
    if kind == A3:
        if c == 0:
            raise DomainError('A3 needs c != 0')
        d, k = params.get('d', 0.0), params.get('k', 0.0)
        shift = math.exp(c ** 2 / (2 * a ** 2) - h * c / a)
        polynomial = d / c * x ** 2 - 2 * d / c ** 2 * x + 2 * d / c ** 3 + k / c
        constant = (2 * h * d / a ** 3 + d * (1 - h ** 2) / (c * a ** 2) - 2 * d / c ** 3
                    - 2 * h * d / (c ** 2 * a) - d * c / a ** 4 - k / c)
        linear = d / (c * a) * x - 2 * d / (c ** 2 * a) - h * d / (c * a ** 2) + d / a ** 3
        return (polynomial * sf(y) * math.exp(c * x)
                - shift * constant * cdf(y - c / a)
                - shift * linear * pdf(y - c / a))
    if kind == A4:
        w, l = params.get('w', 0.0), params.get('l', 0.0)
        shift = math.exp(c ** 2 / (2 * a ** 2) - h * c / a)
        return shift * ((w * c / a ** 3 - w * h / a ** 2 + l / a) * cdf(y - c / a)
                        - w / a ** 2 * pdf(y - c / a))
    raise DomainError(f'unknown identity {kind}')


def appendixA_integrand(kind: str, params: dict, x: float):
    """
    integrand whose antiderivative appendixA_antiderivative returns
    :param kind:
    :param params:
    :param x:
    :return:
    """
    a = params.get('a', 0.0)
    h = params.get('h', 0.0)
    c = params.get('c', 0.0)
    if kind == A1:
        return x ** -1.5 * math.exp(-a * x - h / (2 * x))
    if kind == A2:
        return float(cdf(a * x + h))
    if kind == A3:
        return math.exp(c * x) * (params.get('d', 0.0) * x ** 2 + params.get('k', 0.0)) * float(sf(a * x + h))
    if kind == A4:
        return math.exp(c * x) * (params.get('w', 0.0) * x + params.get('l', 0.0)) * float(pdf(a * x + h))
    raise DomainError(f'unknown identity {kind}')


def _check_b_args(alpha, horizon):
    if alpha < 0 or horizon <= 0:
        raise DomainError('definite integrals need alpha >= 0 and horizon > 0')


def appendixB_closed_form(kind: str, alpha: float, horizon: float):
    """
    B1: int_0^T (T-t)^(-1/2) t^(-1/2) exp(-alpha^2 / (2(T-t))) dt   = 2 pi (1 - Phi(alpha / sqrt(T)))
    B2: int_0^T t^(1/2) (T-t)^(-1/2) exp(-alpha^2 T / (2t(T-t))) dt = T pi (1 - Phi(2 alpha / sqrt(T)))
    :param kind:
    :param alpha:
    :param horizon:
    :return:
    """
    _check_b_args(alpha, horizon)
    if kind == B1:
        return 2 * math.pi * float(sf(alpha / math.sqrt(horizon)))
    if kind == B2:
        return horizon * math.pi * float(sf(2 * alpha / math.sqrt(horizon)))
    raise DomainError(f'unknown identity {kind}')


def appendixB_integral(kind: str, alpha: float, horizon: float, rel_tol=1e-10):
    """
    quadrature of the left-hand side of appendixB_closed_form, in theta with t = T sin^2(theta)
    :param kind:
    :param alpha:
    :param horizon:
    :param rel_tol:
    :return: QuadratureResult
    """
    _check_b_args(alpha, horizon)
    alpha_sq = alpha ** 2

    if kind == B1:
        def integrand(theta):
            c2 = math.cos(theta) ** 2
            if alpha_sq == 0:
                return 2.0
            return 2 * math.exp(-alpha_sq / (2 * horizon * c2)) if c2 > 0 else 0.0
    elif kind == B2:
        def integrand(theta):
            s2 = math.sin(theta) ** 2
            c2 = 1.0 - s2
            if alpha_sq == 0:
                return 2 * horizon * s2
            if s2 <= 0 or c2 <= 0:
                return 0.0
            return 2 * horizon * s2 * math.exp(-alpha_sq / (2 * horizon * s2 * c2))
    else:
        raise DomainError(f'unknown identity {kind}')
    return integrate_1d(integrand, 0.0, math.pi / 2, abs_tol=1e-15, rel_tol=rel_tol)
