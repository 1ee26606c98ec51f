"""High-accuracy reference values for the Mills ratios.

Everything here is deliberately written from scratch rather than on top of
cf/gauss, so a bug in the evaluation engine cannot cancel against the same
bug in the check.  Two independent routes per quantity:

  Gaussian: entire-series summation for small x, and a deep classic fraction
  with a proven per-depth error bound for x >= 1.  The branches overlap on
  [1, 4] and are tested against each other there.

  Gamma: the Laguerre-type fraction run to convergence, cross-checked for
  x >= 1 against direct Simpson quadrature of the tail integral
  integral_0^inf (1 + u/x)^(s-1) e^(-u) du.

Results are cached; grid scans hit the same abscissas repeatedly.
"""

import math
from functools import lru_cache

import numpy as np

from .gamma import ConvergenceError, laguerre


class OracleError(RuntimeError):
    """A reference value could not be certified."""


_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
_LOG2 = math.log(2.0)
_BIG = 2.0 ** 500
_SHRINK = 2.0 ** -512


def _phi(x):
    return math.exp(-0.5 * x * x) / _SQRT_TWO_PI


def _mills_series(x, tol=1e-18, cap=200):
    # c_0 = sqrt(pi/2), c_1 = -1, c_{k+1} = c_{k-1}/(k+1); entire in x
    c_prev = math.sqrt(0.5 * math.pi)
    c_cur = -1.0
    total = c_prev
    xk = x
    k = 1
    while k < cap:
        term = c_cur * xk
        total += term
        if abs(term) < tol:
            return total
        c_prev, c_cur = c_cur, c_prev / (k + 1.0)
        xk *= x
        k += 1
    raise OracleError(f"series for R({x}) still moving after {cap} terms")


def _mills_cf(x, rel_tol=1e-15, max_depth=2000):
    """Deep classic fraction with certified depth selection.

    Forward pass: consecutive convergents bracket R, so
    |R - R_m| <= m!/(B_m B_{m+1}).  The first depth whose bound drops under
    rel_tol times the running value is kept, then re-evaluated backward
    (the numerically benign direction) at exactly that depth.
    """
    A_prev, B_prev = 1.0, 0.0
    A, B = 0.0, 1.0
    scale_bits = 0
    depth = None
    m = 0
    while m < max_depth:
        m += 1
        a = 1.0 if m == 1 else m - 1.0
        A, A_prev = x * A + a * A_prev, A
        B, B_prev = x * B + a * B_prev, B
        if B > _BIG or A > _BIG:
            A *= _SHRINK
            B *= _SHRINK
            A_prev *= _SHRINK
            B_prev *= _SHRINK
            scale_bits += 512
        if m >= 2:
            # bound for depth m-1 uses the pair (B_{m-1}, B_m)
            log_bound = (math.lgamma(m) - math.log(B_prev) - math.log(B)
                         - 2.0 * scale_bits * _LOG2)
            if log_bound <= math.log(rel_tol * (A / B)):
                depth = m - 1
                break
    if depth is None:
        raise OracleError(
            f"classic fraction for R({x}) not certified within {max_depth} levels")
    t = x
    for k in range(depth, 1, -1):
        t = x + (k - 1.0) / t
    return 1.0 / t


@lru_cache(maxsize=None)
def reference_mills(x):
    """R(x) to close to machine precision for x >= 0."""
    x = float(x)
    if math.isnan(x) or x < 0.0:
        raise ValueError("reference_mills needs x >= 0")
    if x < 1.0:
        return _mills_series(x)
    return _mills_cf(x)


def reference_tail(x):
    """Upper tail integral of the standard normal, phi(x) R(x)."""
    return _phi(x) * reference_mills(x)


_QUAD_CUTOFF = 60.0
_QUAD_INTERVALS = 12000


def _gamma_quadrature(s, x):
    # M_s(x) = integral_0^inf (1 + u/x)^(s-1) e^(-u) du after t = x + u;
    # beyond u = 60 the integrand is below 1e-18 for every (s, x) we accept
    u = np.linspace(0.0, _QUAD_CUTOFF, _QUAD_INTERVALS + 1)
    y = (1.0 + u / x) ** (s - 1.0) * np.exp(-u)
    h = _QUAD_CUTOFF / _QUAD_INTERVALS
    return float((h / 3.0) * (y[0] + y[-1]
                              + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum()))


@lru_cache(maxsize=None)
def reference_gamma_mills(s, x):
    """M_s(x) = x^(1-s) e^x Gamma(s, x), certified by two disjoint methods."""
    s, x = float(s), float(x)
    if not (s > 0.0 and x > 0.0):
        raise ValueError("reference_gamma_mills needs s > 0 and x > 0")
    try:
        value = laguerre(s, x)
    except ConvergenceError as exc:
        raise OracleError(f"M_{s}({x}): fraction did not settle") from exc
    if x >= 1.0:
        quad = _gamma_quadrature(s, x)
        if abs(value - quad) > 1e-7 * max(1.0, abs(value)):
            raise OracleError(
                f"M_{s}({x}): fraction {value!r} vs quadrature {quad!r}")
    return value
