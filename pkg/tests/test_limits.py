"""Degeneration regimes: Hermite plane, truncated-unitary disc, real line."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from ellipoly import (
    LimitRegime,
    disc_limit,
    disc_reference,
    hermite_limit,
    make_params,
    realline_constant,
    realline_limit,
)


def test_hermite_diagonal_target_hand_value(p21):
    # n = m = 1: target pi * 1! * a b * (2 x*)^1 = 20 pi / 3
    rep = hermite_limit(p21, 1, 1, (10.0, 100.0, 1000.0))
    assert rep.target == pytest.approx(20.0 * math.pi / 3.0)
    assert rep.verdict
    assert rep.residuals[-1] < 1e-2
    assert rep.residuals[0] > rep.residuals[1] > rep.residuals[2]
    # O(1/alpha): each decade of alpha buys about a decade of accuracy
    assert rep.residuals[1] / rep.residuals[0] < 0.3


def test_hermite_offdiagonal_noise(p21):
    rep = hermite_limit(p21, 0, 2, (10.0, 100.0, 1000.0))
    assert rep.target == 0.0
    assert rep.verdict
    assert max(rep.residuals) < rep.noise_floor


def test_hermite_rejects_bad_sequence(p21):
    with pytest.raises(ValueError):
        hermite_limit(p21, 1, 1, (100.0, 10.0))
    with pytest.raises(ValueError):
        hermite_limit(p21, 1, 1, (10.0,))


def test_disc_reference_matches_beta_moment():
    # <z^n, z^n> on the alpha-weighted unit-a disc is a^{2n} n! / (alpha+2)_n
    for a, alpha in ((1.0, 0.0), (1.0, 2.0), (1.7, 0.5)):
        for n in range(5):
            poch = 1.0
            for k in range(n):
                poch *= alpha + 2.0 + k
            expect = a ** (2 * n) * math.factorial(n) / poch
            got = disc_reference(a, alpha, n, n)
            assert got.real == pytest.approx(expect, rel=1e-12)
            assert abs(got.imag) < 1e-15
    assert abs(disc_reference(1.0, 0.0, 2, 0)) < 1e-15


def test_disc_limit_converges(p21_unused=None):
    rep = disc_limit(1.0, 2, 2, 0.0, (0.9, 0.99, 0.999))
    assert rep.regime is LimitRegime.DISC_TRUNCATED_UNITARY
    assert rep.verdict
    assert rep.residuals[-1] < 1e-3
    off = disc_limit(1.0, 2, 0, 2.0, (0.9, 0.99, 0.999))
    assert off.verdict


def test_disc_limit_rejects_bad_sequence():
    with pytest.raises(ValueError):
        disc_limit(1.0, 1, 1, 0.0, (0.99, 0.9))
    with pytest.raises(ValueError):
        disc_limit(1.0, 1, 1, 0.0, (0.9, 1.0))  # b must stay below a


def test_realline_constant_is_beta_integral():
    # sqrt(pi) Gamma(1+alpha) / (2 Gamma(3/2+alpha)) = int_0^1 (1-t^2)^alpha dt
    for alpha in (-0.5, 0.0, 1.3, 4.0):
        val, err = quad(lambda t: (1 - t * t) ** alpha, 0.0, 1.0)
        assert realline_constant(alpha) == pytest.approx(val, rel=1e-10)


def test_realline_diagonal_converges():
    rep = realline_limit(2.0, 3, 3, 0.0, (0.3, 0.1, 0.03))
    assert rep.verdict
    assert rep.residuals[-1] < 1e-2
    assert rep.residuals[0] > rep.residuals[1] > rep.residuals[2]


def test_realline_offdiagonal_exact_zero_target():
    rep = realline_limit(2.0, 1, 3, 0.0, (0.3, 0.1, 0.03))
    assert rep.target == 0.0
    assert rep.verdict
    assert max(rep.residuals) < rep.noise_floor


def test_realline_rejects_bad_sequence():
    with pytest.raises(ValueError):
        realline_limit(2.0, 1, 1, 0.0, (0.03, 0.1))
    with pytest.raises(ValueError):
        realline_limit(1.0, 1, 1, 0.0, (1.0, 0.5))


def test_reports_carry_parameters(p21):
    rep = hermite_limit(p21, 2, 2, (10.0, 100.0))
    assert rep.parameters == (10.0, 100.0)
    assert len(rep.values) == len(rep.residuals) == 2
    assert rep.tolerance == 1e-2
    d = disc_limit(1.0, 1, 1, 0.0, (0.9, 0.99))
    assert "closed_diag" in d.extras or d.extras  # formula recorded for diagonals
