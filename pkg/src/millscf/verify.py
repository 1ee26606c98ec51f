"""Runtime verification suites: every structural identity the library rests on.

Each suite is a zero-argument callable returning (ok, detail); run_suites
executes a selection in registry order and never lets one suite's exception
take down the rest.  The suites re-derive their expectations from closed
forms or from the independent reference module, so they double as a smoke
test of a freshly built environment (exposed as the CLI's `verify`
subcommand).

The sign-identity suite accepts a fault-injection flag that flips the
asserted parity; it exists so the harness itself can be shown to catch a
wrong sign, and is only reachable through a hidden CLI flag.
"""

import math
import random
from fractions import Fraction

from . import gamma, gauss, reference
from .cf import (
    continuant_oracle,
    convergents,
    equivalence_transform,
    eval_backward,
    eval_doubly_modified,
    forward_recurrence,
)
from .tails import beta0, mod_constants

_X_GRID = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _determinant():
    # the cross product A_prev*B - A*B_prev cancels ~10 digits at depth 15,
    # x = 5 (products ~1e20 against a determinant ~1e10), so the identity is
    # checked exactly in rationals on the same coefficients, and the float
    # state only against its own cancellation noise floor
    spec = gauss.laplace_spec()
    eps = 2.0 ** -52
    worst_noise = 0.0
    for x in (0.5, 1.0, 2.0, 5.0):
        xf = Fraction(x)
        A_prev, B_prev = Fraction(1), Fraction(0)
        A, B = Fraction(0), Fraction(1)
        for n in range(1, 16):
            ak = Fraction(spec.a(n, x))
            bk = Fraction(spec.b(n, x))
            assert bk == xf
            A, A_prev = bk * A + ak * A_prev, A
            B, B_prev = bk * B + ak * B_prev, B
            rhs = Fraction((-1) ** n * math.factorial(n - 1))
            if A_prev * B - A * B_prev != rhs:
                return False, f"exact identity broken at depth {n}, x={x}"
            st = forward_recurrence(spec, x, n)
            if st.scale_log2 != 0:
                return False, f"unexpected rescale at depth {n}, x={x}"
            if st.B <= 0.0:
                return False, f"B_{n}({x}) = {st.B} not positive"
            det = st.A_prev * st.B - st.A * st.B_prev
            floor = eps * abs(st.B * st.B_prev) + eps * abs(float(rhs))
            err = abs(det - float(rhs))
            worst_noise = max(worst_noise, err / max(floor, 1e-300))
    ok = worst_noise <= 50.0
    return ok, (
        "exact in rationals at every depth; float determinant within "
        f"{worst_noise:.1f}x its cancellation noise floor (cap 50x)"
    )


def _backward_forward():
    spec = gauss.laplace_spec()
    worst = 0.0
    for x in (0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 7.5, 10.0):
        for n in (1, 2, 3, 5, 8, 13, 21, 30):
            f = forward_recurrence(spec, x, n).value()
            b = eval_backward(spec, x, n, spec.b(n, x))
            worst = max(worst, _rel(b, f))
    return worst <= 1e-12, f"backward vs forward: worst rel {worst:.2e} (tol 1e-12)"


def _equivalence():
    spec = gauss.laplace_spec()
    ident = equivalence_transform(spec, lambda k, x: 1.0)
    double = equivalence_transform(spec, lambda k, x: 1.0 if k == 0 else 2.0)
    worst = 0.0
    for x in (1.0, 2.0):
        base = convergents(spec, x, 10)
        for other in (ident, double):
            for v, w in zip(base, convergents(other, x, 10)):
                worst = max(worst, _rel(w, v))
    return worst <= 1e-13, f"transformed convergents: worst rel {worst:.2e} (tol 1e-13)"


def _lcf_transform():
    # the unit-denominator fraction in v = 1/x^2 equals x times the Laplace
    # fraction level by level; multiplying its denominators through by x is
    # the equivalence transform that exposes that
    la = gauss.laplace_spec()
    lcf = gauss.lcf_spec()
    x = 2.0
    v = 1.0 / (x * x)
    conv_la = convergents(la, x, 10)
    conv_lcf = convergents(lcf, v, 10)
    worst = max(_rel(cv, x * cl) for cv, cl in zip(conv_lcf, conv_la))
    scaled = equivalence_transform(
        lcf, lambda k, vv: 1.0 if k == 0 else 1.0 / math.sqrt(vv)
    )
    worst2 = max(
        _rel(cs, cv) for cs, cv in zip(convergents(scaled, v, 10), conv_lcf)
    )
    ok = worst <= 1e-13 and worst2 <= 1e-13
    return ok, (
        f"levelwise x*Laplace vs 1/x^2 form: worst rel {worst:.2e}; "
        f"p_k = x transform: worst rel {worst2:.2e} (tol 1e-13)"
    )


def _doubly_modified():
    spec = gauss.laplace_spec()
    worst = 0.0
    for x in (1.0, 2.0):
        for n in (2, 3, 5, 8):
            st = forward_recurrence(spec, x, n)
            an = spec.a(n, x)
            for g in (0.0, 1.0, 2.5):
                direct = (st.A + g * st.A_prev) / (st.B + g * st.B_prev)
                dm = eval_doubly_modified(spec, x, n, alpha=an, gamma=g)
                worst = max(worst, _rel(dm, direct))
            prev = forward_recurrence(spec, x, n - 1).value()
            worst = max(
                worst, _rel(eval_doubly_modified(spec, x, n, 0.0, 0.0), prev)
            )
    spot = _rel(
        eval_doubly_modified(spec, 1.0, 2, spec.a(2, 1.0), 1.0),
        eval_backward(spec, 1.0, 2, 2.0),
    )
    worst = max(worst, spot)
    return worst <= 1e-13, (
        f"singly modified / collapsed / tail-shift forms: worst rel {worst:.2e}"
    )


def _continuant():
    spec = gauss.laplace_spec()
    a1, b1 = continuant_oracle(spec, 3.0, 1)
    if not (a1 == 1.0 and abs(b1 - 3.0) <= 1e-12):
        return False, f"depth-1 anchor at x=3: got A={a1}, B={b1}, want 1, 3"
    worst = 0.0
    for x in (1.0, 3.0):
        for n in range(0, 9):
            a_det, b_det = continuant_oracle(spec, x, n)
            st = forward_recurrence(spec, x, n)
            worst = max(worst, _rel(a_det, st.A), _rel(b_det, st.B))
    return worst <= 1e-12, (
        f"tridiagonal determinants vs recursion, n <= 8: worst rel {worst:.2e}"
    )


def _alternating():
    violations = 0
    checks = 0
    for x in _X_GRID:
        ref = reference.reference_mills(x)
        vals = [gauss.mills(x, k, "classic").value for k in range(13)]
        evens = vals[0::2]
        odds = vals[1::2]
        for v in evens:
            checks += 1
            if not v > ref:
                violations += 1
        for v in odds:
            checks += 1
            if not v < ref:
                violations += 1
        for a, b in zip(evens, evens[1:]):
            checks += 1
            if not a > b:
                violations += 1
        for a, b in zip(odds, odds[1:]):
            checks += 1
            if not a < b:
                violations += 1
    return violations == 0, (
        f"even-from-above / odd-from-below bracketing, depths 0..12: "
        f"{violations} violations in {checks} checks"
    )


def _error_bound():
    violations = 0
    checks = 0
    tightest = math.inf
    for x in _X_GRID:
        ref = reference.reference_mills(x)
        for n in range(13):
            err = abs(ref - gauss.mills(x, n, "classic").value)
            bound = gauss.truncation_bound(x, n)
            checks += 1
            if not err < bound:
                violations += 1
            elif err > 0.0:
                tightest = min(tightest, bound / err)
    return violations == 0, (
        f"strict |R - R_n| < n!/(B_n B_(n+1)): {violations} violations in "
        f"{checks} checks; smallest bound/error ratio {tightest:.3f}"
    )


def _euler_diff():
    spec = gauss.laplace_spec()
    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        vals = convergents(spec, x, 13)
        B = [forward_recurrence(spec, x, m).B for m in range(14)]
        for m in range(1, 13):
            lhs = vals[m - 1] - vals[m]
            rhs = (-1.0) ** (m + 1) * math.factorial(m) / (B[m] * B[m + 1])
            worst = max(worst, _rel(lhs, rhs))
        for m in range(1, 7):
            lhs = vals[2 * m] - vals[2 * m - 2]
            rhs = -x * math.factorial(2 * m - 1) / (B[2 * m - 1] * B[2 * m + 1])
            worst = max(worst, _rel(lhs, rhs))
        for m in range(1, 7):
            prev = vals[2 * m - 3] if m > 1 else 0.0
            lhs = vals[2 * m - 1] - prev
            rhs = x * math.factorial(2 * m - 2) / (B[2 * m - 2] * B[2 * m])
            worst = max(worst, _rel(lhs, rhs))
    return worst <= 1e-9, (
        f"consecutive and skip-level difference identities: worst rel {worst:.2e}"
    )


def _ode_residual():
    h = 1e-4
    worst = 0.0
    for i in range(25):
        x = 0.1 + 7.9 * i / 24.0
        d = (reference.reference_mills(x + h) - reference.reference_mills(x - h)) / (
            2.0 * h
        )
        worst = max(worst, abs(d - (x * reference.reference_mills(x) - 1.0)))
    return worst <= 1e-6, f"R' = xR - 1 by central differences: worst abs {worst:.2e}"


def _fit_conditions():
    value_fams = ("shift-linear", "linear", "sqrt", "improved-expo")
    for fam in value_fams:
        for n in range(5):
            d0 = gauss.delta(0.0, n, fam)
            if abs(d0) > 1e-14:
                return False, f"Delta_{n}(0) = {d0:.2e} for {fam} (tol 1e-14)"
    for fam in ("linear", "improved-expo"):
        for n in range(5):
            s0 = gauss.error_integrand(0.0, n, fam)
            if abs(s0) > 1e-12:
                return False, f"delta_{n}(0) = {s0:.2e} for {fam} (tol 1e-12)"
    for n in range(5):
        c0 = gauss.second_error_integrand(0.0, n, "improved-expo")
        if abs(c0) > 1e-9:
            return False, f"delta_{n}''(0) = {c0:.2e} for improved-expo (tol 1e-9)"
    slopes = []
    for n in range(4):
        lo = abs(gauss.delta(1e-3, n, "improved-expo"))
        hi = abs(gauss.delta(1e-1, n, "improved-expo"))
        slope = math.log(hi / lo) / math.log(100.0)
        slopes.append(slope)
        if slope < 2.7:
            return False, f"log-log slope at 0 for improved-expo n={n}: {slope:.2f}"
    return True, (
        "value/slope/curvature fits hold; improved-expo origin slopes "
        + ", ".join(f"{s:.2f}" for s in slopes)
    )


_SIGN_SAMPLES = 200


def _sign_identity(inject_fault=False):
    rng = random.Random(987321)
    families = (
        "classic", "limit-ansatz", "sqrt", "linear",
        "lee", "shift-linear", "improved-expo",
    )
    checked = 0
    disagreements = 0
    while checked < _SIGN_SAMPLES:
        n = rng.randint(0, 6)
        u = rng.uniform(1e-6, 10.0)
        fam = rng.choice(families)
        g = gauss.sign_operator(u, n, fam)
        if abs(g) <= 1e-9:
            continue
        d = gauss.error_integrand(u, n, fam)
        if abs(d) < 1e-13:
            # below double-precision resolution of 1 + R' - uR; no sign to read
            continue
        parity = -1.0 if n % 2 == 0 else 1.0
        if inject_fault:
            parity = -parity
        checked += 1
        if math.copysign(1.0, d) != parity * math.copysign(1.0, g):
            disagreements += 1
    return disagreements == 0, (
        f"sign(delta_n) vs (-1)^(n-1) sign(u b + b' + n - b^2): "
        f"{disagreements} disagreements in {checked} samples"
    )


def _hazard_bracket():
    worst = 0.0
    for i in range(33):
        x = 8.0 * i / 32.0
        worst = max(worst, abs(gauss.hazard(x) * reference.reference_mills(x) - 1.0))
    h10 = gauss.hazard(10.0)
    if not 10.0 < h10 < 10.1:
        return False, f"hazard(10) = {h10} outside (x, x + 1/x)"
    h0 = gauss.hazard(0.0)
    if _rel(h0, math.sqrt(2.0 / math.pi)) > 1e-14:
        return False, f"hazard(0) = {h0}, want sqrt(2/pi)"
    return worst <= 1e-14, (
        f"hazard * mills = 1 on [0, 8]: worst abs {worst:.2e} (tol 1e-14)"
    )


def _zero_fit_constants():
    rec = math.sqrt(2.0 / math.pi)
    worst = _rel(beta0(0), rec)
    for n in range(1, 51):
        rec = n / rec
        b = beta0(n)
        worst = max(worst, _rel(b, rec))
        if not math.sqrt(n + 0.5) < b < math.sqrt(n + 1.0):
            return False, f"beta_{n}(0) = {b} outside (sqrt(n+1/2), sqrt(n+1))"
        c = mod_constants(n)
        if not (c.lam > 0.0 and c.r > 0.0):
            return False, f"lambda_{n} = {c.lam}, r_{n} = {c.r}: not both positive"
        worst = max(worst, _rel(beta0(n) * beta0(n - 1), float(n)))
    anchors = (
        (mod_constants(1).lam, math.pi / 2.0 - 1.0),
        (mod_constants(1).r, math.pi - 3.0),
        (mod_constants(0).lam, 2.0 / math.pi),
        (mod_constants(0).r, 2.0 * (2.0 / math.pi - 0.5)),
    )
    for got, want in anchors:
        worst = max(worst, _rel(got, want))
    return worst <= 1e-12, (
        f"closed form vs recursion vs anchors, n <= 50: worst rel {worst:.2e}"
    )


def _pade():
    p0 = gauss.pade_r2(0.0)
    if abs(p0 - math.sqrt(0.5 * math.pi)) > 1e-15:
        return False, f"pade_r2(0) = {p0!r}, want sqrt(pi/2)"
    x = 1e6
    if abs(x * gauss.pade_r2(x) - 1.0) > 1e-6:
        return False, "x * pade_r2(x) not within 1e-6 of 1 at x = 1e6"
    x = 1e3
    k = x ** 3 * (gauss.pade_r2(x) - 1.0 / x)
    if abs(k + 1.0) > 0.01:
        return False, f"x^3 (pade_r2 - 1/x) = {k:.6f} at x=1e3, want -1 within 1%"
    p3 = gauss.pade_r2(0.0, origin_terms=3)
    if abs(p3 - math.sqrt(0.5 * math.pi)) > 1e-14:
        return False, f"three-origin-term variant at 0: {p3!r}"
    if abs(1e6 * gauss.pade_r2(1e6, origin_terms=3) - 1.0) > 1e-3:
        return False, "three-origin-term variant drifts from 1/x at x = 1e6"
    return True, f"value anchor, 1/x tail, and x^-3 coefficient {k:.4f} all hold"


def _series():
    if gauss.asymptotic_series(4.0, 0).value != 0.25:
        return False, "m = 0 partial sum is not 1/x"
    v = gauss.asymptotic_series(5.0, 2).value
    if _rel(v, 603.0 / 3125.0) > 1e-15:
        return False, f"x=5, m=2 partial sum {v!r}, want 603/3125"
    if not gauss.asymptotic_series(1.0, 10).diverging:
        return False, "divergence flag not set at x=1, m=10"
    if gauss.asymptotic_series(10.0, 4).diverging:
        return False, "divergence flag wrongly set at x=10, m=4"
    far = abs(gauss.asymptotic_series(10.0, 4).value - reference.reference_mills(10.0))
    if far > 1e-5:
        return False, f"x=10, m=4 misses reference by {far:.2e}"
    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        worst = max(worst, _rel(gauss.taylor_mills(x), reference.reference_mills(x)))
    c2 = gauss.taylor_mills(1.0, 3) - gauss.taylor_mills(1.0, 2)
    if _rel(c2, math.sqrt(0.5 * math.pi) / 2.0) > 1e-14:
        return False, f"series coefficient c_2 = {c2!r}, want c_0/2"
    return worst <= 1e-13, (
        f"asymptotic anchors hold; Taylor vs reference worst rel {worst:.2e}"
    )


def _branch_agreement():
    worst = 0.0
    for i in range(50):
        x = 0.5 + 1.5 * i / 49.0
        worst = max(
            worst, _rel(reference._mills_series(x), reference._mills_cf(x))
        )
    return worst <= 1e-13, (
        f"series vs deep-fraction oracle branches on [0.5, 2]: worst rel {worst:.2e}"
    )


def _tail_monotonicity():
    xs = [0.1 * i for i in range(101)]
    mills_vals = [reference.reference_mills(x) for x in xs]
    tail_vals = [reference.reference_tail(x) for x in xs]
    ok_m = all(a > b for a, b in zip(mills_vals, mills_vals[1:]))
    ok_t = all(a > b for a, b in zip(tail_vals, tail_vals[1:]))
    return ok_m and ok_t, (
        f"strict decrease on [0, 10]: mills {ok_m}, tail {ok_t}"
    )


def _oracle_bracket():
    for x in _X_GRID:
        ref = reference.reference_mills(x)
        lo = gauss.mills(x, 11, "classic").value
        hi = gauss.mills(x, 12, "classic").value
        if not lo < ref < hi:
            return False, f"reference at x={x} outside depth-11/12 bracket"
    return True, "reference always inside the depth-11/12 classic bracket"


def _gamma_closed_forms():
    checks = [
        ("M_1(5) via contracted form", gamma.laguerre(1.0, 5.0, 10), 1.0, 1e-12),
        ("M_1(2.5) via alternating form", gamma.cf_l1(1.0, 2.5, 7), 1.0, 1e-14),
        ("M_2(4) via reduction", gamma.reduce_s(2.0, 4.0), 1.25, 1e-12),
        ("M_2(0.5) adaptive", gamma.laguerre(2.0, 0.5), 3.0, 1e-12),
        ("M_3(5) exact truncation", gamma.laguerre(3.0, 5.0), 1.48, 1e-12),
        ("M_3(2) via reduction", gamma.reduce_s(3.0, 2.0), 2.5, 1e-12),
        ("cumulative side at s=1", gamma.lower_cf(1.0, 1.0, 30), math.e - 1.0, 1e-10),
        ("index-shift anchor M_2(2)", reference.reference_gamma_mills(2.0, 2.0), 1.5, 1e-12),
    ]
    for label, got, want, tol in checks:
        if _rel(got, want) > tol:
            return False, f"{label}: got {got!r}, want {want!r} (tol {tol})"
    return True, f"{len(checks)} closed-form anchors hold"


def _gamma_form_agreement():
    worst = 0.0
    for s in (0.3, 0.5, 0.9):
        for x in (1.0, 2.0, 5.0):
            a = gamma.cf_l1(s, x)
            b = gamma.laguerre(s, x)
            c = gamma.winitzki_cf(s, x)
            worst = max(worst, _rel(a, b), _rel(b, c), _rel(a, c))
    return worst <= 1e-8, (
        f"three tail forms pairwise, adaptive depth: worst rel {worst:.2e} (tol 1e-8)"
    )


def _gamma_complement():
    worst = 0.0
    for s in (0.5, 0.8, 1.0, 1.5):
        for x in (0.5, 1.0, 2.0):
            total = gamma.lower_cf(s, x) + gamma.laguerre(s, x)
            target = x ** (1.0 - s) * math.exp(x) * math.gamma(s)
            worst = max(worst, _rel(total, target))
    return worst <= 1e-8, (
        f"lower + upper vs x^(1-s) e^x Gamma(s): worst rel {worst:.2e} (tol 1e-8)"
    )


def _gamma_ode():
    h = 1e-4
    worst = 0.0
    for s in (0.5, 2.5):
        for x in (1.0, 2.0, 5.0):
            d = (gamma.laguerre(s, x + h) - gamma.laguerre(s, x - h)) / (2.0 * h)
            rhs = gamma.GammaParams(s, x).q() * gamma.laguerre(s, x) - 1.0
            worst = max(worst, _rel(d, rhs))
    return worst <= 1e-5, f"M' = q M - 1 by central differences: worst rel {worst:.2e}"


def _gamma_limit():
    worst = 0.0
    for s in (0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0):
        worst = max(worst, abs(gamma.laguerre(s, 1000.0) - 1.0))
    return worst <= 0.01, f"|M_s(1000) - 1| <= 0.01: worst {worst:.2e}"


def _gamma_gauss():
    # fixed depths rather than adaptive: the unit-denominator form creeps
    # too slowly at x = z^2/2 = 0.125 for the successive-convergent stop
    worst = 0.0
    for z in (0.5, 1.0, 1.5, 2.0, 3.0, 5.0):
        want = z * reference.reference_mills(z)
        x = z * z / 2.0
        worst = max(worst, _rel(gamma.laguerre(0.5, x, 400), want))
        worst = max(worst, _rel(gamma.winitzki_cf(0.5, x, 500), want))
    return worst <= 1e-8, (
        f"M_(1/2)(z^2/2) = z R(z), both forms: worst rel {worst:.2e} (tol 1e-8)"
    )


def _gamma_bracket():
    for s in (0.25, 0.5, 0.75, 1.0):
        for x in (0.5, 1.0, 2.0, 5.0):
            ref = reference.reference_gamma_mills(s, x)
            for n in (1, 3, 6, 10):
                lo, hi = gamma.bounds_s01(s, x, n)
                if not lo <= ref <= hi:
                    return False, (
                        f"oracle outside bracket at s={s}, x={x}, n={n}: "
                        f"({lo}, {hi}) vs {ref}"
                    )
    widths = [
        b - a for a, b in (gamma.bounds_s01(0.5, 2.0, n) for n in range(2, 13))
    ]
    if not all(a > b for a, b in zip(widths, widths[1:])):
        return False, "bracket width not strictly shrinking at s=0.5, x=2"
    return True, "all brackets contain the oracle; widths shrink monotonically"


SUITES = {
    "determinant": _determinant,
    "backward-forward": _backward_forward,
    "equivalence": _equivalence,
    "lcf-transform": _lcf_transform,
    "doubly-modified": _doubly_modified,
    "continuant": _continuant,
    "alternating": _alternating,
    "error-bound": _error_bound,
    "euler-diff": _euler_diff,
    "ode-residual": _ode_residual,
    "fit-conditions": _fit_conditions,
    "sign-identity": _sign_identity,
    "hazard-bracket": _hazard_bracket,
    "zero-fit-constants": _zero_fit_constants,
    "pade": _pade,
    "series": _series,
    "branch-agreement": _branch_agreement,
    "tail-monotonicity": _tail_monotonicity,
    "oracle-bracket": _oracle_bracket,
    "gamma-closed-forms": _gamma_closed_forms,
    "gamma-form-agreement": _gamma_form_agreement,
    "gamma-complement": _gamma_complement,
    "gamma-ode": _gamma_ode,
    "gamma-limit": _gamma_limit,
    "gamma-gauss": _gamma_gauss,
    "gamma-bracket": _gamma_bracket,
}


def run_suites(names=None, inject_sign_fault=False):
    """Run the named suites (all by default); returns [(name, ok, detail)].

    Unknown names raise ValueError.  A suite that raises is reported as a
    failure carrying the exception text instead of aborting the run.
    """
    selected = list(SUITES) if names is None else list(names)
    unknown = [n for n in selected if n not in SUITES]
    if unknown:
        raise ValueError(
            f"unknown suite(s) {unknown}; available: {', '.join(SUITES)}"
        )
    results = []
    for name in selected:
        fn = SUITES[name]
        try:
            if name == "sign-identity":
                ok, detail = fn(inject_sign_fault)
            else:
                ok, detail = fn()
        except Exception as exc:  # noqa: BLE001 - suite crash is a failure
            ok, detail = False, f"raised {exc!r}"
        results.append((name, ok, detail))
    return results
