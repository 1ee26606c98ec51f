"""Gamma Mills ratio: the four fraction forms, reduction, and brackets."""

import math

import pytest

from millscf.gamma import (
    ConvergenceError,
    GammaParams,
    bounds_s01,
    cf_l1,
    laguerre,
    lower_cf,
    reduce_s,
    winitzki_cf,
)
from millscf.reference import reference_gamma_mills, reference_mills


def test_params_validation():
    with pytest.raises(ValueError):
        GammaParams(0.0, 1.0)
    with pytest.raises(ValueError):
        GammaParams(-2.0, 1.0)
    with pytest.raises(ValueError):
        GammaParams(1.0, -0.5)
    with pytest.raises(ValueError):
        GammaParams(float("inf"), 1.0)
    p = GammaParams(0.5, 2.0)
    assert p.q() == pytest.approx(1.25, rel=1e-15)
    with pytest.raises(ValueError):
        GammaParams(0.5, 0.0).q()


def test_integer_shapes_truncate_exactly():
    # s = 1: every form collapses to M_1 = 1
    assert cf_l1(1.0, 2.0, 7) == 1.0
    assert laguerre(1.0, 5.0, 10) == pytest.approx(1.0, rel=1e-12)
    assert winitzki_cf(1.0, 2.0, 30) == pytest.approx(1.0, rel=1e-12)
    # s = 2: M_2 = 1 + 1/x
    assert cf_l1(2.0, 3.0, 40) == pytest.approx(4.0 / 3.0, rel=1e-10)
    assert cf_l1(2.0, 3.0) == pytest.approx(4.0 / 3.0, rel=1e-10)


def test_fractional_shape_values():
    # M_{1/2}(2) = 2 R(2) through the Gaussian equivalence
    want = 2.0 * reference_mills(2.0)
    assert laguerre(0.5, 2.0) == pytest.approx(want, rel=1e-10)
    assert winitzki_cf(0.5, 2.0, 400) == pytest.approx(want, rel=1e-8)
    # M_3(5) = 1.48 by two integrations by parts
    assert reduce_s(3.0, 5.0) == pytest.approx(1.48, rel=1e-12)
    assert laguerre(3.0, 4.0, 50) == pytest.approx(reduce_s(3.0, 4.0), rel=1e-9)


def test_winitzki_against_gaussian():
    z = 1.5
    want = z * reference_mills(z)
    assert winitzki_cf(0.5, z * z / 2.0, 80) == pytest.approx(want, rel=1e-8)
    assert winitzki_cf(0.5, 4.0, 60) == pytest.approx(laguerre(0.5, 4.0, 60),
                                                      rel=1e-9)


def test_lower_fraction():
    # x^{1-s} e^x gamma(s, x): vanishes at 0, equals e-1 for s=1, x=1
    assert lower_cf(1.0, 0.0) == 0.0
    assert lower_cf(1.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-10)
    # complement: lower + upper = x^{1-s} e^x Gamma(s)
    s, x = 0.5, 1.0
    total = x ** (1.0 - s) * math.exp(x) * math.gamma(s)
    assert lower_cf(s, x) + laguerre(s, x) == pytest.approx(total, rel=1e-8)


def test_adaptive_depth_and_failure():
    # adaptive mode needs no explicit depth on friendly inputs
    assert laguerre(0.5, 2.0) == pytest.approx(laguerre(0.5, 2.0, 300),
                                               rel=1e-11)
    # the 1/x-variable form creeps at small x and hits the cap
    with pytest.raises(ConvergenceError):
        winitzki_cf(0.5, 0.125)


def test_form_validation():
    with pytest.raises(ValueError):
        cf_l1(1.0, -1.0, 10)
    with pytest.raises(ValueError):
        laguerre(0.5, 0.0, 10)
    with pytest.raises(ValueError):
        winitzki_cf(0.5, 0.0, 10)


def test_reduce_s():
    assert reduce_s(2.0, 4.0) == pytest.approx(1.25, rel=1e-13)
    for s in (2.0, 3.0, 4.5):
        for x in (1.0, 2.0, 5.0):
            direct = laguerre(s, x, 200)
            assert reduce_s(s, x) == pytest.approx(direct, rel=1e-8), (s, x)
    assert reduce_s(4.5, 3.0, evaluator=lambda s_, x_: laguerre(s_, x_, 80)) == \
        pytest.approx(laguerre(4.5, 3.0, 80), rel=1e-8)
    with pytest.raises(ValueError):
        reduce_s(1.0, 2.0)
    with pytest.raises(ValueError):
        reduce_s(0.5, 2.0)
    with pytest.raises(TypeError):
        reduce_s(2.5, 2.0, evaluator="laguerre")


def test_bounds_s01():
    # s = 1 truncates both ends of the bracket to the exact value
    assert bounds_s01(1.0, 2.0, 5) == (1.0, 1.0)
    for s in (0.25, 0.5, 0.75):
        for x in (0.5, 1.0, 2.0, 4.0):
            lo, hi = bounds_s01(s, x, 8)
            ref = reference_gamma_mills(s, x)
            assert lo <= ref <= hi, (s, x)
    # widths shrink with depth
    w8 = bounds_s01(0.5, 1.0, 8)
    w12 = bounds_s01(0.5, 1.0, 12)
    assert (w12[1] - w12[0]) < (w8[1] - w8[0])
    with pytest.raises(ValueError):
        bounds_s01(1.5, 1.0, 8)


def test_limit_toward_one():
    assert laguerre(0.5, 1000.0) == pytest.approx(1.0, abs=1e-2)
    assert laguerre(0.9, 500.0) == pytest.approx(1.0, abs=1e-2)
