"""The Gamma Mills ratio M_s(x) = x^(1-s) e^x Gamma(s, x) by continued fractions.

Gamma(s, x) is the upper incomplete gamma integral; the normalization makes
M_s finite and O(1) on the whole quadrant s > 0, x > 0, with M_s(x) -> 1 as
x -> infinity and the closed forms M_1 = 1, M_2 = 1 + 1/x.  Four fraction
forms are implemented and cross-checked against one another:

  cf_l1        x/(x + (1-s)/(1 + 1/(x + (2-s)/(1 + ...))))
  laguerre     x^s/(x+1-s + (s-1)/(x+3-s + 2(s-2)/(x+5-s + ...))),
               then divided by x^(s-1)
  lower_cf     x/(s - sx/(1+s+x - (1+s)x/(2+s+x - ...))),
               which is the cumulative side x^(1-s) e^x int_0^x u^(s-1)e^-u du
  winitzki_cf  1/(1 + (1-s)v/(1 + v/(1 + (2-s)v/(1 + 2v/(1 + ...))))), v = 1/x

At s = 1/2 the first form reduces to the Gaussian Laplace fraction:
M_{1/2}(z^2/2) = z R(z) with R the Gaussian Mills ratio (substitute
u = t^2/2 in the tail integral).  For s > 1 the ratio is reduced by
induction on the integer part via M_s = 1 + ((s-1)/x) M_{s-1}, so only
shapes in (0, 1] ever reach a fraction; there the cf_l1 coefficients stay
nonnegative and consecutive convergents bracket the true value.

Depth control: passing n evaluates a single depth-n convergent; omitting it
runs the fraction adaptively until two successive convergents agree to
1e-12 relative, capped at depth 500 (no a-priori truncation bound is
available here, unlike the Gaussian case).
"""

import math
from dataclasses import dataclass

from .cf import CFSpec, eval_backward

ADAPTIVE_REL_TOL = 1e-12
ADAPTIVE_MAX_DEPTH = 500

# treat shape distances below this as exact integers so the fractions
# truncate instead of dividing through numerators of order 1e-16
_SNAP = 1e-13


class ConvergenceError(ArithmeticError):
    """Adaptive evaluation hit the depth cap before successive convergents met."""


@dataclass(frozen=True)
class GammaParams:
    """Shape and abscissa of M_s(x), validated once at construction."""

    s: float
    x: float

    def __post_init__(self):
        if not (math.isfinite(self.s) and self.s > 0.0):
            raise ValueError(f"shape s must be finite and > 0, got {self.s!r}")
        if not (math.isfinite(self.x) and self.x >= 0.0):
            raise ValueError(f"abscissa x must be finite and >= 0, got {self.x!r}")

    def q(self):
        """1 + (1-s)/x, the drift coefficient of R' = q R - 1."""
        if self.x <= 0.0:
            raise ValueError("q needs x > 0")
        return 1.0 + (1.0 - self.s) / self.x


def _snap_zero(v):
    return 0.0 if abs(v) < _SNAP else v


def l1_spec(s):
    """x/(x + (1-s)/(1 + 1/(x + (2-s)/(1 + ...)))); evaluates to M_s(x).

    Even levels carry the shape: a_{2j} = j - s, a_{2j+1} = j, against
    denominators alternating x, 1.  For s in (0, 1] every coefficient is
    nonnegative, which is what the bracketing of bounds_s01 rests on.
    """

    def a(k, x):
        if k == 1:
            return x
        j, odd = divmod(k, 2)
        return float(j) if odd else _snap_zero(j - s)

    def b(k, x):
        return x if k % 2 == 1 else 1.0

    return CFSpec(a=a, b=b, domain=(0.0, math.inf), name="l1")


def laguerre_spec(s):
    """x^s/(x+1-s + (s-1)/(x+3-s + 2(s-2)/(x+5-s + ...))).

    The value is x^(s-1) M_s(x); callers divide the extra power back out.
    Numerators (k-1)(s-k+1) vanish at integer shapes, truncating the
    fraction exactly (after snapping).
    """

    def a(k, x):
        if k == 1:
            return x ** s
        return (k - 1) * _snap_zero(s - k + 1.0)

    def b(k, x):
        return x + 2.0 * k - 1.0 - s

    return CFSpec(a=a, b=b, domain=(0.0, math.inf), name="laguerre")


def lower_spec(s):
    """x/(s - sx/(1+s+x - (1+s)x/(2+s+x - ...))).

    Evaluates the cumulative side x^(1-s) e^x int_0^x u^(s-1) e^-u du; the
    complement identity lower + M_s = x^(1-s) e^x Gamma(s) ties it to the
    tail forms.  Numerators are negative, so intermediate denominators can
    pass through zero; such points raise rather than return junk.
    """

    def a(k, x):
        if k == 1:
            return x
        return -(k - 2.0 + s) * x

    def b(k, x):
        return s if k == 1 else (k - 1.0) + s + x

    return CFSpec(a=a, b=b, domain=(0.0, math.inf), name="lower")


def winitzki_spec(s):
    """1/(1 + (1-s)v/(1 + v/(1 + (2-s)v/(1 + 2v/(1 + ...))))), v = 1/x.

    The l1 form with every x-denominator divided through: all b_k = 1 and
    the variable moves into the numerators.  Same value M_s(x), better
    behaved when x is large and depth is fixed.
    """

    def a(k, x):
        if k == 1:
            return 1.0
        v = 1.0 / x
        j, odd = divmod(k, 2)
        return j * v if odd else _snap_zero(j - s) * v

    def b(k, x):
        return 1.0

    return CFSpec(a=a, b=b, domain=(0.0, math.inf), name="winitzki")


_RESCALE_LIMIT = 2.0 ** 500
_RESCALE_FACTOR = 2.0 ** -512


def _adaptive(spec, x, rel_tol=ADAPTIVE_REL_TOL, max_depth=ADAPTIVE_MAX_DEPTH):
    # forward recursion, stopping on relative agreement of successive
    # convergents; only ratios are consumed, so rescaling needs no exponent
    A_prev, B_prev = 1.0, 0.0
    A, B = spec.b0(x), 1.0
    prev = None
    for k in range(1, max_depth + 1):
        ak = spec.a(k, x)
        bk = spec.b(k, x)
        A, A_prev = bk * A + ak * A_prev, A
        B, B_prev = bk * B + ak * B_prev, B
        m = max(abs(A), abs(B), abs(A_prev), abs(B_prev))
        if m > _RESCALE_LIMIT:
            A, B = A * _RESCALE_FACTOR, B * _RESCALE_FACTOR
            A_prev, B_prev = A_prev * _RESCALE_FACTOR, B_prev * _RESCALE_FACTOR
        if B != 0.0:
            cur = A / B
            if prev is not None and abs(cur - prev) <= rel_tol * max(abs(cur), 1e-300):
                return cur
            prev = cur
    raise ConvergenceError(
        f"{spec.name} fraction at s-form, x={x!r}: successive convergents "
        f"still apart after {max_depth} levels"
    )


def _evaluate(spec, x, n):
    if n is None:
        return _adaptive(spec, x)
    if n < 0:
        raise ValueError("depth n must be >= 0")
    if n == 0:
        return spec.b0(x)
    return eval_backward(spec, x, n, spec.b(n, x))


def cf_l1(s, x, n=None):
    """M_s(x) through the alternating-denominator form; depth n or adaptive."""
    GammaParams(s, x)
    if x <= 0.0:
        raise ValueError("cf_l1 needs x > 0")
    return _evaluate(l1_spec(s), x, n)


def laguerre(s, x, n=None):
    """M_s(x) through the contracted form; exact at integer s."""
    GammaParams(s, x)
    if x <= 0.0:
        raise ValueError("laguerre needs x > 0")
    return _evaluate(laguerre_spec(s), x, n) / x ** (s - 1.0)


def lower_cf(s, x, n=None):
    """x^(1-s) e^x int_0^x u^(s-1) e^-u du, the cumulative complement."""
    GammaParams(s, x)
    if x == 0.0:
        return 0.0
    return _evaluate(lower_spec(s), x, n)


def winitzki_cf(s, x, n=None):
    """M_s(x) through the unit-denominator form in v = 1/x."""
    GammaParams(s, x)
    if x <= 0.0:
        raise ValueError("winitzki_cf needs x > 0")
    return _evaluate(winitzki_spec(s), x, n)


def reduce_s(s, x, evaluator=None):
    """M_s(x) for s > 1 by induction on the integer part of the shape.

    M_s = 1 + ((s-1)/x) M_{s-1} follows from integrating Gamma(s, x) by
    parts; applied repeatedly it lowers the shape into (0, 1], where the
    supplied evaluator (default: adaptive laguerre) takes over.
    """
    GammaParams(s, x)
    if s <= 1.0:
        raise ValueError("reduce_s handles s > 1; call an evaluator directly")
    if x <= 0.0:
        raise ValueError("reduce_s needs x > 0")
    if evaluator is None:
        evaluator = laguerre
    if not callable(evaluator):
        raise TypeError(f"evaluator must be callable, got {evaluator!r}")
    steps = math.ceil(s) - 1
    base = s - steps
    value = evaluator(base, x)
    for j in range(1, steps + 1):
        value = 1.0 + ((base + j - 1.0) / x) * value
    return value


def bounds_s01(s, x, n):
    """Bracketing pair for M_s(x), s in (0, 1]: cf_l1 depths n and n+1, sorted.

    Nonnegative coefficients make consecutive convergents enclose the true
    value; at s = 1 the numerator 1 - s kills the fraction and both sides
    collapse to the exact value 1.
    """
    GammaParams(s, x)
    if not 0.0 < s <= 1.0:
        raise ValueError("bounds_s01 is stated for s in (0, 1]")
    if x <= 0.0:
        raise ValueError("bounds_s01 needs x > 0")
    if n < 0:
        raise ValueError("depth n must be >= 0")
    lo = cf_l1(s, x, n)
    hi = cf_l1(s, x, n + 1)
    if lo > hi:
        lo, hi = hi, lo
    return lo, hi
