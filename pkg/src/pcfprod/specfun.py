"""Scalar special functions: Gamma, erfc, Hermite, K_{1/4}, and the
parabolic cylinder function D of real order.

D is evaluated through two genuinely independent routes so the rest of
the library can cross-validate against it:

* negative real order -nu (nu > 0): the defining integral
  D_{-nu}(z) = e^{-z^2/4}/Gamma(nu) * int_0^inf t^{nu-1} e^{-z t - t^2/2} dt,
  a smooth, exponentially decaying integrand handled by the
  semi-infinite quadrature engine;
* nonnegative integer order n: D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z/sqrt 2).

Other orders are rejected explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .quadrature import IntegrandSpec, integrate_semi_infinite

__all__ = [
    "SeriesResult",
    "hermite",
    "gamma",
    "erfc",
    "bessel_k_quarter",
    "pcf_d",
]

_ORDER_LIMIT = 20.0
_INT_EPS = 1e-12


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series with convergence metadata.

    ``tail_bound`` is an estimated absolute bound on the truncation
    error of ``value``.
    """

    value: float
    terms_used: int
    tail_bound: float


def hermite(n: int, x: float) -> float:
    """Physicists' Hermite polynomial H_n(x) by the three-term recurrence.

    For extreme n*x the recurrence overflows to signed infinity, which
    is returned as-is (never wrapped or silently replaced); callers that
    need large n must use the scaled recurrence in :mod:`pcfprod.hermsum`.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"Hermite degree must be a nonnegative integer, got {n}")
    if n == 0:
        return 1.0
    hm, hc = 1.0, 2.0 * x
    for k in range(1, n):
        hm, hc = hc, 2.0 * x * hc - 2.0 * k * hm
    return hc


def gamma(nu: float) -> float:
    """Gamma function for positive real argument."""
    if not nu > 0.0:
        raise DomainError(f"gamma requires a positive argument, got {nu}")
    return math.gamma(nu)


def erfc(x: float) -> float:
    """Complementary error function."""
    return math.erfc(x)


def bessel_k_quarter(z: float, tol: float = 1e-12) -> float:
    """Modified Bessel function K_{1/4}(z) for z > 0.

    Uses K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt.
    """
    if not z > 0.0:
        raise DomainError(f"bessel_k_quarter requires z > 0, got {z}")

    def integrand(t: float) -> float:
        if t > 700.0:
            return 0.0
        e = z * math.cosh(t)
        if e > 700.0:
            return 0.0
        return math.exp(-e) * math.cosh(0.25 * t)

    spec = IntegrandSpec(endpoint_exponent=0.0, decay_rate=1.0)
    return integrate_semi_infinite(integrand, spec, tol).value


def _pcf_d_negative_order(nu: float, z: float, tol: float) -> float:
    # defining integral; exponent -z t - t^2/2 peaks at t = -z for z < 0
    def integrand(t: float) -> float:
        expo = -z * t - 0.5 * t * t
        if expo < -745.0:
            return 0.0
        return t ** (nu - 1.0) * math.exp(expo)

    spec = IntegrandSpec(endpoint_exponent=nu - 1.0, decay_rate=1.0 + max(z, 0.0))
    integral = integrate_semi_infinite(integrand, spec, tol).value
    return math.exp(-0.25 * z * z) / math.gamma(nu) * integral


def pcf_d(nu_order: float, z: float, tol: float = 1e-12) -> float:
    """Parabolic cylinder function D_order(z) for real order.

    Supported orders: any negative real order in [-20, 0), and
    nonnegative integers up to 20.  Anything else raises
    :class:`DomainError` -- there is no silent fallback.
    """
    if abs(nu_order) > _ORDER_LIMIT:
        raise DomainError(f"order {nu_order} outside supported range [-20, 20]")
    if nu_order < 0.0:
        return _pcf_d_negative_order(-nu_order, z, tol)
    n = round(nu_order)
    if abs(nu_order - n) > _INT_EPS:
        raise DomainError(
            f"positive non-integer order {nu_order} is unsupported "
            "(only negative real orders and nonnegative integers)"
        )
    return 2.0 ** (-0.5 * n) * math.exp(-0.25 * z * z) * hermite(n, z / math.sqrt(2.0))
