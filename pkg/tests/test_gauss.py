"""Gaussian Mills ratio approximants, error functionals, and series."""

import math

import pytest

from millscf import cf, tails
from millscf.gauss import (
    asymptotic_series,
    decays_beyond,
    delta,
    error_integrand,
    hazard,
    laplace_spec,
    lcf_spec,
    mills,
    mills_derivatives,
    pade_r2,
    phi,
    scan_max_delta,
    second_error_integrand,
    sign_operator,
    taylor_mills,
    truncation_bound,
)
from millscf.reference import reference_mills

SQRT_PI_2 = math.sqrt(math.pi / 2.0)


def test_phi_anchors():
    assert phi(0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi), rel=1e-15)
    assert phi(1.0) == pytest.approx(math.exp(-0.5) / math.sqrt(2.0 * math.pi),
                                     rel=1e-15)


def test_mills_hand_values():
    # classic n=1 at x=1: 1/(1 + 1/1) worked out by hand
    a = mills(1.0, 1, "classic")
    assert a.value == 0.5
    assert a.bound_side == "lower"
    assert a.trunc_bound == pytest.approx(0.5, rel=1e-15)
    # the origin fit of the shift-linear tail
    b = mills(0.0, 3, "shift-linear")
    assert b.value == pytest.approx(SQRT_PI_2, abs=1e-14)
    assert b.trunc_bound is None
    # far tail: x R(x) -> 1 from below
    far = mills(50.0, 2, "classic").value * 50.0
    assert 0.999 < far < 1.0


def test_mills_bound_sides():
    for n in range(6):
        side = mills(1.5, n, "classic").bound_side
        assert side == ("upper" if n % 2 == 0 else "lower")
        val = mills(1.5, n, "classic").value
        ref = reference_mills(1.5)
        assert (val >= ref) == (n % 2 == 0)
    assert mills(1.5, 2, "improved-expo").bound_side == "unknown"


def test_mills_domain_errors():
    with pytest.raises(ValueError):
        mills(0.0, 1, "classic")
    with pytest.raises(ValueError):
        mills(-0.5, 1, "linear")
    with pytest.raises(ValueError):
        mills(1.0, -2, "linear")
    with pytest.raises(ValueError):
        mills(0.0, 0, "limit-ansatz")
    with pytest.raises(ValueError):
        mills(1.0, 1, "no-such-family")


def test_truncation_bound_values():
    assert truncation_bound(1.0, 1) == pytest.approx(0.5, rel=1e-14)
    # 10!/(B_10 B_11) at x=1, denominators from the forward recursion
    assert truncation_bound(1.0, 10) == pytest.approx(3628800.0 / 338969216.0,
                                                      rel=1e-12)
    for n in (1, 4, 9):
        assert truncation_bound(2.0, n) < truncation_bound(1.0, n)
    with pytest.raises(ValueError):
        truncation_bound(0.0, 3)
    with pytest.raises(ValueError):
        truncation_bound(1.0, -1)


def test_truncation_bound_is_honest():
    for x in (0.5, 1.0, 3.0):
        for n in range(1, 9):
            err = abs(mills(x, n, "classic").value - reference_mills(x))
            assert err < truncation_bound(x, n), (x, n)


def test_hazard_anchors():
    assert hazard(0.0) == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-13)
    assert hazard(1.0) == pytest.approx(1.5251352761609812, rel=1e-12)
    assert 10.0 < hazard(10.0) < 10.1
    assert hazard(2.0) * reference_mills(2.0) == pytest.approx(1.0, abs=1e-15)


def test_asymptotic_series_values():
    r = asymptotic_series(5.0, 2)
    assert r.value == pytest.approx(603.0 / 3125.0, rel=1e-15)
    assert not r.diverging
    assert asymptotic_series(5.0, 13).diverging          # 27 > 25
    assert not asymptotic_series(5.0, 12).diverging
    good = asymptotic_series(10.0, 4)
    assert abs(good.value - reference_mills(10.0)) < 1e-5
    assert not good.diverging
    with pytest.raises(ValueError):
        asymptotic_series(0.0, 2)
    with pytest.raises(ValueError):
        asymptotic_series(5.0, -1)


def test_taylor_mills():
    for x in (0.0, 0.25, 1.0, 3.5):
        assert taylor_mills(x) == pytest.approx(reference_mills(x), rel=1e-13)
    assert taylor_mills(1.0, m=40) == pytest.approx(reference_mills(1.0),
                                                    rel=1e-13)
    # few terms leave a visible remainder; more terms shrink it
    rough = abs(taylor_mills(1.0, m=3) - reference_mills(1.0))
    finer = abs(taylor_mills(1.0, m=20) - reference_mills(1.0))
    assert rough > 0.1 and finer < 1e-9
    with pytest.raises(ValueError):
        taylor_mills(4.5)
    with pytest.raises(ValueError):
        taylor_mills(1.0, m=0)


def test_delta_values():
    assert delta(1.0, 1, "classic") == pytest.approx(0.03766989167188537,
                                                     rel=1e-10)
    for name in ("sqrt", "linear", "shift-linear", "improved-expo"):
        assert abs(delta(0.0, 2, name)) < 1e-14, name


def test_error_integrand_hand_values():
    # classic depth 0 is R_0 = 1/u, so delta_0(u) = -1/u^2
    assert error_integrand(1.0, 0, "classic") == pytest.approx(-1.0, rel=1e-13)
    assert error_integrand(2.0, 0, "classic") == pytest.approx(-0.25, rel=1e-13)
    # and the second form R'' - 2uR' + (u^2-1)R - u gives 2/u^3 + 1/u
    assert second_error_integrand(1.0, 0, "classic") == pytest.approx(3.0,
                                                                      rel=1e-11)


def test_derivatives_match_differences():
    h = 1e-5
    for name in ("classic", "improved-expo", "linear"):
        for n in (1, 3):
            for u in (0.8, 2.0):
                r, r1, r2 = mills_derivatives(u, n, name)
                vp = mills(u + h, n, name).value
                vm = mills(u - h, n, name).value
                assert r == pytest.approx(mills(u, n, name).value, rel=1e-13)
                assert r1 == pytest.approx((vp - vm) / (2 * h), abs=5e-9)
                assert r2 == pytest.approx((vp - 2 * r + vm) / (h * h), abs=5e-5)


def test_exact_continuation_tail_kills_the_error():
    # replacing the terminating denominator by the true continuation of the
    # fraction reproduces R itself, so delta_n collapses to rounding noise
    def continuation(n, x, depth=80):
        t = x
        for m in range(depth, n + 1, -1):
            t = x + (m - 1) / t
        return t

    h = 1e-6
    fam = tails.custom(
        value=lambda n, x: continuation(n, x),
        deriv=lambda n, x: (continuation(n, x + h)
                            - continuation(n, x - h)) / (2.0 * h),
    )
    assert abs(delta(2.0, 3, fam)) < 1e-14
    assert abs(error_integrand(2.0, 3, fam)) < 1e-10
    assert abs(error_integrand(4.0, 3, fam)) < 1e-10


def test_sign_operator_families():
    # classic tail: u x + 1 + n - x^2 at x = u collapses to n + 1
    for n in (0, 2, 5):
        for u in (0.5, 2.0):
            assert sign_operator(u, n, "classic") == pytest.approx(n + 1.0,
                                                                   rel=1e-12)
    # limit ansatz: the operator reduces to beta'
    fam = tails.get_family("limit-ansatz")
    for n in (1, 3):
        for u in (0.0, 1.5):
            assert sign_operator(u, n, fam) == pytest.approx(
                fam.deriv(n, u), rel=1e-10)
    assert sign_operator(0.0, 2, "limit-ansatz") == pytest.approx(0.5, rel=1e-12)
    # sqrt family starts negative at the origin: 1/2 + n - beta_n(0)^2 < 0
    for n in (0, 1, 4):
        v = sign_operator(0.0, n, "sqrt")
        assert -0.5 < v < 0.0, (n, v)


def test_quantitative_sign_lemma():
    # delta_n(u) (beta B_n + n B_{n-1})^2 = (-1)^(n-1) n! G_n(beta)
    lap = laplace_spec()
    for name in ("classic", "sqrt", "improved-expo"):
        fam = tails.get_family(name)
        for n in (1, 2, 3):
            for u in (0.7, 1.5, 3.0):
                st = cf.forward_recurrence(lap, u, n)
                d_n = fam.value(n, u) * st.B + n * st.B_prev
                lhs = error_integrand(u, n, fam) * d_n * d_n
                rhs = (-1.0) ** (n - 1) * math.factorial(n) * sign_operator(
                    u, n, fam)
                assert lhs == pytest.approx(rhs, rel=1e-9), (name, n, u)


def test_pade_variants():
    assert pade_r2(0.0) == pytest.approx(SQRT_PI_2, abs=1e-15)
    assert pade_r2(0.0, origin_terms=3) == pytest.approx(SQRT_PI_2, abs=1e-15)
    # both reproduce the 1/x leading behaviour at infinity
    for terms in (1, 3):
        assert pade_r2(1e6, origin_terms=terms) * 1e6 == pytest.approx(
            1.0, rel=1e-5)
    # the default also matches the next asymptotic coefficient: x^3(f-1/x) -> -1
    x = 1e3
    assert x**3 * (pade_r2(x) - 1.0 / x) == pytest.approx(-1.0, rel=0.01)
    # the 3-term variant matches value, slope and curvature at the origin
    h = 1e-4
    f0 = pade_r2(0.0, origin_terms=3)
    f1 = (pade_r2(h, origin_terms=3) - pade_r2(0.0, origin_terms=3)) / h
    fp, fm = pade_r2(h, origin_terms=3), pade_r2(0.0, origin_terms=3)
    second = (pade_r2(2 * h, origin_terms=3) - 2 * fp + fm) / (h * h)
    assert f1 == pytest.approx(-1.0, abs=1e-3)
    assert second == pytest.approx(SQRT_PI_2, abs=1e-2)
    with pytest.raises(ValueError):
        pade_r2(1.0, origin_terms=2)


def test_pade_global_error_levels():
    grid = [i / 10.0 for i in range(0, 81)]
    worst1 = max(abs(pade_r2(x) - reference_mills(x)) for x in grid)
    worst3 = max(abs(pade_r2(x, origin_terms=3) - reference_mills(x))
                 for x in grid)
    assert 0.05 < worst1 < 0.07      # one matched term at each end
    assert 5e-3 < worst3 < 6e-3      # three terms at the origin, one at infinity
    assert worst3 < worst1


def test_scan_max_delta_improved_depth0():
    x_star, worst = scan_max_delta("improved-expo", 0)
    assert worst == pytest.approx(2.139459e-4, rel=1e-3)
    assert x_star == pytest.approx(1.387, abs=5e-3)
    assert decays_beyond("improved-expo", 0)


def test_lcf_matches_laplace_up_to_x():
    # the 1/x^2 form evaluates x R(x); level by level it is x times the
    # plain fraction
    lap, lcf = laplace_spec(), lcf_spec()
    x = 2.0
    a = cf.convergents(lap, x, 10)
    b = cf.convergents(lcf, 1.0 / (x * x), 10)
    for va, vb in zip(a, b):
        assert vb == pytest.approx(x * va, rel=1e-13)
