"""Gaussian Mills ratio R(x) = (1 - Phi(x))/phi(x) via its Laplace fraction.

R solves R'(x) = x R(x) - 1 with R(0) = sqrt(pi/2) and expands, for x > 0, as

    R(x) = 1/(x + 1/(x + 2/(x + 3/(x + ...)))),

whose depth-(n+1) truncation with the final denominator x replaced by a
positive tail beta_n(x) is the modified approximation

    R_n(x) = 1/(x + 1/(x + 2/(x + ... + n/beta_n(x)))).

The error functional Delta_n(x) = integral_x^inf phi(u) du - phi(x) R_n(x)
satisfies Delta_n(x) = integral_x^inf phi(u) delta_n(u) du with the integrand

    delta_n(u) = 1 + R_n'(u) - u R_n(u),

and delta_n factors through the tail as

    delta_n(u) = ((-1)^(n-1) n! / D_n(u)^2) * (u beta + beta' + n - beta^2),

where D_n is the modified denominator beta B_n + n B_{n-1} of R_n.  So the
sign of delta_n is read off the quadratic operator in beta alone (the last
factor, sign_operator below), which is how bracketing statements are proved
for the families in tails.py.

Indexing: the public n counts the largest numerator of the terminating
fraction, so n = 0 is 1/beta_0(x) and the classic (beta = x) member at n
equals the engine's depth-(n+1) convergent.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .cf import CFSpec, eval_backward, forward_recurrence
from .tails import get_family, mod_constants

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
SQRT_HALF_PI = math.sqrt(0.5 * math.pi)
_LOG2 = math.log(2.0)


def phi(x):
    """Standard normal density."""
    return math.exp(-0.5 * x * x) / SQRT_TWO_PI


def laplace_spec():
    """The Gaussian Mills fraction: a = 1, 1, 2, 3, ...; all b = x."""
    return CFSpec(
        a=lambda k, x: 1.0 if k == 1 else float(k - 1),
        b=lambda k, x: x,
        domain=(0.0, math.inf),
        name="laplace",
    )


def lcf_spec():
    """The same fraction in v = 1/x^2; its value is x R(x), not R(x).

    a_1 = 1, a_k = (k-1) v for k >= 2, all b = 1.  The equivalence transform
    with p(k) = x carries this into laplace_spec times x.
    """
    return CFSpec(
        a=lambda k, v: 1.0 if k == 1 else (k - 1) * v,
        b=lambda k, v: 1.0,
        domain=(0.0, math.inf),
        name="lcf",
    )


_LAPLACE = laplace_spec()


@dataclass(frozen=True)
class Approximation:
    """One evaluated Mills approximation with its bound metadata."""

    value: float
    n: int
    family: str
    bound_side: str               # "upper" | "lower" | "unknown"
    trunc_bound: Optional[float]  # classic only


def _check_point(fam, n, x):
    if n < 0:
        raise ValueError("n must be >= 0")
    if fam.kind == "classic":
        if x <= 0.0:
            raise ValueError("the classic tail needs x > 0")
    elif x < 0.0:
        raise ValueError("modified tails are defined for x >= 0")
    elif fam.kind == "limit-ansatz" and n == 0 and x == 0.0:
        raise ValueError("limit-ansatz with n = 0 vanishes at x = 0")


def _terminated(x, n, fam):
    # depth n+1: the tail replaces the denominator under the numerator n
    return eval_backward(_LAPLACE, x, n + 1, fam.value(n, x))


def _bound_side(fam, n):
    if fam.bound_side == "alternating":
        return "upper" if n % 2 == 0 else "lower"
    return "unknown"


def mills(x, n, family="improved-expo"):
    """R_n(x) for the given tail family, with bound side and classic bound.

    bound_side is only claimed for families with proven alternation
    (classic, sqrt, linear): even n from above, odd n from below.
    """
    fam = get_family(family)
    _check_point(fam, n, x)
    value = _terminated(x, n, fam)
    bound = truncation_bound(x, n) if fam.kind == "classic" else None
    return Approximation(value=value, n=n, family=fam.kind,
                         bound_side=_bound_side(fam, n), trunc_bound=bound)


def hazard(x):
    """phi(x)/(1 - Phi(x)), the reciprocal of the reference Mills ratio.

    Backed by the oracle, not by a terminated fraction: the hazard is the
    quantity the approximations get compared against.  For x >= 1 it lies
    between x and x + 1/x (the two shallowest classic convergents of R).
    """
    from . import reference  # imported here to avoid an import cycle

    return 1.0 / reference.reference_mills(x)


def truncation_bound(x, n):
    """n! / (B_n B_{n+1}) for the classic fraction, in log space.

    Strictly dominates |R - R_n| for every x > 0.  B here is the engine
    denominator sequence B_0 = 1, B_1 = x, so the state at depth n+1 carries
    both factors; the rescale exponent re-enters through the logarithm.
    """
    if x <= 0.0:
        raise ValueError("truncation bound needs x > 0")
    if n < 0:
        raise ValueError("n must be >= 0")
    st = forward_recurrence(_LAPLACE, x, n + 1)
    log_bound = (math.lgamma(n + 1.0)
                 - math.log(st.B) - math.log(st.B_prev)
                 - 2.0 * st.scale_log2 * _LOG2)
    return math.exp(log_bound)


def mills_derivatives(u, n, family="improved-expo"):
    """(R_n, R_n', R_n'') at u, by differentiating the backward recursion.

    Every denominator level is u itself (unit derivative), the numerators are
    constants, and the tail contributes its own three derivatives, so each
    fold t <- u + k/t maps (t, t', t'') exactly.
    """
    fam = get_family(family)
    _check_point(fam, n, u)
    t = fam.value(n, u)
    t1 = fam.deriv(n, u)
    t2 = fam.second_deriv(n, u)
    for k in range(n, 0, -1):
        if t == 0.0:
            raise ZeroDivisionError(f"tail chain vanished under numerator {k}")
        s = u + k / t
        s1 = 1.0 - k * t1 / (t * t)
        s2 = -k * t2 / (t * t) + 2.0 * k * t1 * t1 / (t * t * t)
        t, t1, t2 = s, s1, s2
    # top level: R = 1/t
    r = 1.0 / t
    r1 = -t1 / (t * t)
    r2 = -t2 / (t * t) + 2.0 * t1 * t1 / (t * t * t)
    return r, r1, r2


def error_integrand(u, n, family="improved-expo"):
    """delta_n(u) = 1 + R_n'(u) - u R_n(u); identically 0 iff R_n is exact."""
    r, r1, _ = mills_derivatives(u, n, family)
    return 1.0 + r1 - u * r


def second_error_integrand(u, n, family="improved-expo"):
    """delta_n''-type operator: R_n'' - 2u R_n' + (u^2 - 1) R_n - u."""
    r, r1, r2 = mills_derivatives(u, n, family)
    return r2 - 2.0 * u * r1 + (u * u - 1.0) * r - u


def sign_operator(u, n, family="improved-expo"):
    """u beta + beta' + n - beta^2: carries the sign of delta_n.

    sign(delta_n(u)) = (-1)^(n-1) sign(sign_operator) wherever the operator
    is nonzero; the positive factor n!/D_n(u)^2 never flips it.
    """
    fam = get_family(family)
    _check_point(fam, n, u)
    b = fam.value(n, u)
    b1 = fam.deriv(n, u)
    return u * b + b1 + n - b * b


def delta(x, n, family="improved-expo"):
    """Delta_n(x) = reference tail minus phi(x) R_n(x)."""
    from . import reference  # imported here to avoid an import cycle

    fam = get_family(family)
    _check_point(fam, n, x)
    return reference.reference_tail(x) - phi(x) * _terminated(x, n, fam)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def scan_max_delta(family, n, xmin=0.0, xmax=20.0, step=1e-3,
                   refine_width=1e-8):
    """(argmax, max) of |Delta_n| on [xmin, xmax]: grid scan plus golden section.

    The grid has the stated step; the bracketing interval around the best
    grid point is narrowed to refine_width by golden-section search.
    xmin exists for the classic family, whose tail is undefined at 0.
    """
    fam = get_family(family)

    def f(x):
        return abs(delta(x, n, fam))

    best_i, best = 0, -1.0
    npts = int(round((xmax - xmin) / step))
    for i in range(npts + 1):
        v = f(xmin + i * step)
        if v > best:
            best, best_i = v, i
    lo = max(xmin, xmin + (best_i - 1) * step)
    hi = min(xmax, xmin + (best_i + 1) * step)
    c = hi - _GOLDEN * (hi - lo)
    d = lo + _GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > refine_width:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - _GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _GOLDEN * (hi - lo)
            fd = f(d)
    x_star = (lo + hi) / 2.0
    return x_star, f(x_star)


def decays_beyond(family, n, points=(22.0, 26.0, 30.0)):
    """True when |Delta_n| strictly decreases along the given far points."""
    vals = [abs(delta(x, n, family)) for x in points]
    return all(a > b for a, b in zip(vals, vals[1:]))


class AsymptoticResult(NamedTuple):
    value: float
    diverging: bool


def asymptotic_series(x, m):
    """Partial sum (1/x) sum_{j<=m} (-1)^j (2j-1)!!/x^(2j).

    The series is asymptotic, not convergent: once the next term would grow
    ((2m+1) > x^2) the result is flagged diverging and more terms only hurt.
    """
    if x <= 0.0:
        raise ValueError("asymptotic series needs x > 0")
    if m < 0:
        raise ValueError("m must be >= 0")
    total = 0.0
    term = 1.0
    for j in range(m + 1):
        total += term
        term *= -(2 * j + 1) / (x * x)
    diverging = (2 * m + 1) > x * x
    return AsymptoticResult(total / x, diverging)


_TAYLOR_TOL = 1e-18
_TAYLOR_CAP = 200


def taylor_sum(x, tol=_TAYLOR_TOL, cap=_TAYLOR_CAP):
    """sum c_k x^k with c_0 = sqrt(pi/2), c_1 = -1, c_{k+1} = c_{k-1}/(k+1).

    The coefficient recursion is the power-series form of R' = xR - 1; the
    function is entire, so the only truncation control needed is the absolute
    term floor.
    """
    c_prev = SQRT_HALF_PI   # c_0
    c_cur = -1.0            # c_1
    total = c_prev
    xk = x                  # x^k for the current coefficient
    k = 1
    while k < cap:
        term = c_cur * xk
        total += term
        if abs(term) < tol:
            break
        c_prev, c_cur = c_cur, c_prev / (k + 1.0)
        xk *= x
        k += 1
    return total


def taylor_mills(x, m=None):
    """Series evaluation of R; kept to |x| <= 4 where cancellation is mild.

    m is the number of series terms; by default terms are taken until they
    fall below the absolute floor of taylor_sum.
    """
    if abs(x) > 4.0:
        raise ValueError("taylor_mills is restricted to |x| <= 4")
    if m is None:
        return taylor_sum(x)
    if m < 1:
        raise ValueError("m must be >= 1")
    return taylor_sum(x, tol=0.0, cap=m)


def pade_r2(x, origin_terms=1):
    """Two-point rational approximations of R with numerator degree 1.

    Both choices fix R(0) = sqrt(pi/2) exactly and behave like 1/x at
    infinity; the four available coefficients are split differently:

      origin_terms=1: one series coefficient at 0, three at infinity, i.e.
        (x + c)/(x^2 + c x + 1) with c = sqrt(pi/2), which is also
        1/(x + 1/(x + c)).  x^3 (f - 1/x) -> -1, matching R's first
        correction term; worst error about 6.0e-2 near 0.4.
      origin_terms=3: value, slope and curvature at 0 plus 1/x at infinity.
        Tightest uniform error (about 5.6e-3) but its x^3 (f - 1/x) grows
        without bound, so it tracks the tail only to first order.
    """
    if origin_terms == 1:
        c = SQRT_HALF_PI
        return (x + c) / (x * x + c * x + 1.0)
    if origin_terms == 3:
        pi = math.pi
        num = (pi - 2.0) * SQRT_TWO_PI + x * (4.0 - pi)
        den = 2.0 * (pi - 2.0) + x * SQRT_TWO_PI + x * x * (4.0 - pi)
        return num / den
    raise ValueError("origin_terms must be 1 or 3")
