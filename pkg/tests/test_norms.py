"""Closed-form squared norms, conventions, and Gram-Schmidt recovery."""

import math

import numpy as np
import pytest

from ellipoly import (
    area_measure,
    build_rule,
    canonical_measure,
    chebyshev_t,
    chebyshev_u,
    chebyshev_v,
    chebyshev_w,
    closed_norm,
    eval_coeffs,
    flat_measure,
    gegenbauer,
    gegenbauer_coeffs,
    gegenbauer_norm,
    gram_matrix,
    gram_schmidt,
    jacobi_half,
    legendre,
    log_monic_norm,
    make_params,
    monic_norm,
)
from ellipoly.polynomials import CoefficientVector


def test_gegenbauer_norm_anchor(p21):
    # h_1 = (1+alpha)/(2+alpha) * C_1^{(1+alpha)}(5/3); alpha = 0 gives 5/3
    assert gegenbauer_norm(0.0, p21, 1) == pytest.approx(5.0 / 3.0, rel=1e-14)
    assert gegenbauer_norm(0.0, p21, 0) == pytest.approx(1.0)


@pytest.mark.parametrize("family,alpha", [
    (gegenbauer(0.8), 0.8),
    (legendre(), -0.5),
])
def test_closed_norm_matches_quadrature_area(p21, family, alpha):
    g = gram_matrix(family, canonical_measure(family, p21), 8)
    np.testing.assert_allclose(g.diag, g.closed_diag, rtol=1e-11)
    assert g.max_offdiag < 1e-11 * np.max(g.diag)


def test_closed_norm_matches_quadrature_chebyshev(p21):
    for fam in (chebyshev_t(), chebyshev_u(), chebyshev_v(), chebyshev_w()):
        g = gram_matrix(fam, canonical_measure(fam, p21), 8)
        np.testing.assert_allclose(g.diag, g.closed_diag, rtol=1e-9)


def test_chebyshev_t_n0_special_branch(p21):
    # the n = 0 norm is the logarithm branch, not the q-power formula
    assert closed_norm(chebyshev_t(), p21, 0) == pytest.approx(
        math.pi * math.log(3.0), rel=1e-14)
    assert closed_norm(chebyshev_u(), p21, 0) == pytest.approx(
        math.pi * p21.a * p21.b, rel=1e-14)


def test_convention_factor(p21):
    # flat (plain d^2 z) and normalized (mass-one) conventions differ by
    # pi a b / (1 + alpha) for the area families
    for alpha in (0.0, 1.0, 2.5):
        fam = gegenbauer(alpha)
        ratio = closed_norm(fam, p21, 3, normalized=False) \
            / closed_norm(fam, p21, 3, normalized=True)
        assert ratio == pytest.approx(math.pi * p21.a * p21.b / (1 + alpha),
                                      rel=1e-13)


def test_monic_norm_anchors(p21):
    assert monic_norm(0.0, p21, 1) == pytest.approx(5.0 / 4.0, rel=1e-13)
    assert monic_norm(3.0, p21, 1) == pytest.approx(0.5, rel=1e-12)
    assert monic_norm(0.0, p21, 0) == pytest.approx(1.0)


def test_monic_norm_two_routes_agree(p21):
    for alpha in (-0.9, -0.5, 0.0, 1.0, 3.7):
        for n in (0, 1, 2, 5, 11, 20, 30):
            lg = log_monic_norm(alpha, p21, n, method="gegenbauer")
            lh = log_monic_norm(alpha, p21, n, method="hypergeometric")
            assert lg == pytest.approx(lh, abs=1e-11)
    with pytest.raises(ValueError):
        log_monic_norm(0.0, p21, 1, method="nosuch")


def test_monic_norm_positive_and_decreasing_in_alpha(p21):
    for alpha in (-0.99, -0.5, 0.0, 2.0, 5.0):
        vals = [monic_norm(alpha, p21, n) for n in range(41)]
        assert all(v > 0.0 for v in vals)
    # the weight concentrates as alpha grows, so each norm shrinks
    for n in (1, 4, 9):
        v = [monic_norm(al, p21, n) for al in (0.0, 1.0, 2.0, 4.0)]
        assert v[0] > v[1] > v[2] > v[3]


def test_gram_schmidt_recovers_gegenbauer(p21):
    alpha = 0.0
    gs = gram_schmidt(area_measure(p21, alpha), 10)
    assert gs[0].shape == (1,)
    assert gs[0][0] == pytest.approx(1.0)
    for n in range(11):
        cv = gegenbauer_coeffs(alpha, n)
        expect = cv.coeffs / p21.c ** np.arange(n + 1) \
            / math.sqrt(gegenbauer_norm(alpha, p21, n))
        np.testing.assert_allclose(gs[n], expect, rtol=1e-8, atol=1e-8)


def test_gram_schmidt_flat_measure_gives_second_kind(p21, complex_grid):
    """Under plain d^2 z the orthonormal family is U_n(z/c)/sqrt(norm)."""
    gs = gram_schmidt(flat_measure(p21), 6)
    for n in range(7):
        got = eval_coeffs(CoefficientVector(alpha=None, n=n, coeffs=gs[n]),
                          complex_grid)
        u = gegenbauer_coeffs(0.0, n)
        expect = eval_coeffs(u, complex_grid / p21.c) \
            / math.sqrt(closed_norm(chebyshev_u(), p21, n))
        np.testing.assert_allclose(got, expect, rtol=1e-8, atol=1e-8)


def test_gram_schmidt_rank_deficiency_raises(p21):
    rule = build_rule(area_measure(p21, 0.0), n_radial=4, n_angular=8)
    with pytest.raises(np.linalg.LinAlgError):
        gram_schmidt(area_measure(p21, 0.0), 40, rule=rule)


def test_gram_matrix_records_rule_and_errors(p21):
    fam = jacobi_half(1.5, -1)
    from ellipoly import derived_params

    d = derived_params(p21)
    g = gram_matrix(fam, canonical_measure(fam, d), 6, n_radial=48,
                    n_angular=128)
    assert g.n_radial == 48 and g.n_angular == 128
    assert g.matrix.shape == (7, 7)
    assert g.max_diag_error < 1e-10
    assert len(g.diag_relative_errors) == 7


def test_closed_norm_rejects_bad_degree(p21):
    with pytest.raises(ValueError):
        closed_norm(gegenbauer(0.0), p21, -1)
