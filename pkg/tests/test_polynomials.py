"""Polynomial evaluation against independent oracles (scipy.special)."""

import math

import numpy as np
import pytest
from scipy.special import (
    eval_chebyt,
    eval_chebyu,
    eval_gegenbauer,
    eval_hermite,
    eval_jacobi,
    eval_legendre,
    hyp2f1,
)

from ellipoly import (
    chebyshev_t,
    chebyshev_u,
    chebyshev_v,
    chebyshev_w,
    eval_coeffs,
    eval_family,
    eval_terminating_2f1,
    family_matrix,
    gegenbauer,
    gegenbauer_coeffs,
    gegenbauer_derivative,
    gegenbauer_matrix,
    hermite,
    jacobi_half,
    legendre,
    make_params,
    recurrence_coeffs,
)

XGRID = np.linspace(-1.8, 1.8, 13)


@pytest.mark.parametrize("alpha", [-0.9, -0.5, 0.0, 0.7, 2.5])
def test_gegenbauer_matrix_vs_scipy(alpha):
    C = gegenbauer_matrix(alpha, 10, XGRID)
    for n in range(11):
        np.testing.assert_allclose(
            C[n], eval_gegenbauer(n, 1.0 + alpha, XGRID), rtol=1e-12, atol=1e-12)


def test_gegenbauer_complex_vs_coefficients(complex_grid):
    # recurrence on complex arguments vs the explicit Gamma-ratio coefficients
    for alpha in (-0.5, 1.3):
        C = gegenbauer_matrix(alpha, 12, complex_grid)
        for n in range(13):
            cv = gegenbauer_coeffs(alpha, n)
            np.testing.assert_allclose(C[n], eval_coeffs(cv, complex_grid),
                                       rtol=1e-10, atol=1e-10)


def test_low_degree_gegenbauer_closed_forms():
    lam = 1.7  # alpha = 0.7
    z = 0.4 + 0.25j
    C = gegenbauer_matrix(0.7, 2, z)
    assert C[0] == pytest.approx(1.0)
    assert C[1] == pytest.approx(2 * lam * z)
    assert C[2] == pytest.approx(2 * lam * (1 + lam) * z**2 - lam)


def test_chebyshev_families_vs_scipy():
    T = family_matrix(chebyshev_t(), 9, XGRID)
    U = family_matrix(chebyshev_u(), 9, XGRID)
    V = family_matrix(chebyshev_v(), 9, XGRID)
    W = family_matrix(chebyshev_w(), 9, XGRID)
    for n in range(10):
        np.testing.assert_allclose(T[n], eval_chebyt(n, XGRID), rtol=1e-12)
        np.testing.assert_allclose(U[n], eval_chebyu(n, XGRID), rtol=1e-12)
        # V_n = U_n - U_{n-1}, W_n = U_n + U_{n-1}
        um1 = eval_chebyu(n - 1, XGRID) if n else 0.0
        np.testing.assert_allclose(V[n], eval_chebyu(n, XGRID) - um1, rtol=1e-12)
        np.testing.assert_allclose(W[n], eval_chebyu(n, XGRID) + um1, rtol=1e-12)


def test_legendre_and_hermite_vs_scipy():
    P = family_matrix(legendre(), 8, XGRID)
    H = family_matrix(hermite(), 8, XGRID)
    for n in range(9):
        np.testing.assert_allclose(P[n], eval_legendre(n, XGRID), rtol=1e-12,
                                   atol=1e-14)
        np.testing.assert_allclose(H[n], eval_hermite(n, XGRID), rtol=1e-12)


@pytest.mark.parametrize("alpha,sign", [(0.0, 1), (0.0, -1), (1.5, 1), (1.5, -1)])
def test_jacobi_half_vs_scipy(alpha, sign):
    fam = jacobi_half(alpha, sign)
    J = family_matrix(fam, 8, XGRID)
    for n in range(9):
        np.testing.assert_allclose(
            J[n], eval_jacobi(n, alpha + 0.5, sign * 0.5, XGRID),
            rtol=1e-12, atol=1e-13)


def test_eval_family_single_degree(complex_grid):
    fam = gegenbauer(0.3)
    np.testing.assert_allclose(eval_family(fam, 5, complex_grid),
                               gegenbauer_matrix(0.3, 5, complex_grid)[5])


def test_family_parameter_validation():
    with pytest.raises(ValueError):
        gegenbauer(-1.0)
    with pytest.raises(ValueError):
        jacobi_half(0.0, 2)
    with pytest.raises(ValueError):
        jacobi_half(-1.2, 1)


def test_second_kind_quadratic_argument_identities():
    """U_{2n+1}(x) = 2x U_n(2x^2-1) and U_{2n}(x) = W_n(2x^2-1).

    These are the identities that collapse the even/odd split on the derived
    ellipse back into half-degree polynomials in the squared variable.
    """
    x = np.linspace(-1.6, 1.6, 9)
    x2 = 2 * x * x - 1
    U = family_matrix(chebyshev_u(), 17, x)
    Uh = family_matrix(chebyshev_u(), 8, x2)
    Wh = family_matrix(chebyshev_w(), 8, x2)
    for n in range(8):
        np.testing.assert_allclose(U[2 * n + 1], 2 * x * Uh[n], rtol=1e-11)
        np.testing.assert_allclose(U[2 * n], Wh[n], rtol=1e-11, atol=1e-12)


def test_chebyshev_u_at_xstar_q_power_form():
    # U_k(a/c) = (c/2b) (q^{k+1} - q^{-k-1}) with q = (a+b)/c
    p = make_params(2.0, 1.0)
    q = p.r / p.c
    U = gegenbauer_matrix(0.0, 12, np.array([p.a / p.c]))
    for k in range(13):
        closed = p.c / (2 * p.b) * (q ** (k + 1) - q ** (-k - 1))
        assert U[k, 0] == pytest.approx(closed, rel=1e-12)


def test_terminating_2f1_vs_scipy():
    for n in (0, 1, 4, 9):
        for b, c, x in ((2.5, 1.2, -0.4), (6.0, 0.9, 0.3), (3.0, 2.0, -1.5)):
            assert eval_terminating_2f1(n, b, c, x) == pytest.approx(
                hyp2f1(-n, b, c, x), rel=1e-12)
    with pytest.raises(ValueError):
        eval_terminating_2f1(3, 1.0, -2.0, 0.5)  # pole in the c-Pochhammer


def test_gegenbauer_derivative_vs_polynomial_derivative(complex_grid):
    for alpha in (-0.5, 0.8):
        for n in (1, 3, 7):
            cv = gegenbauer_coeffs(alpha, n)
            dcoef = np.polynomial.polynomial.polyder(cv.coeffs)
            expect = np.polynomial.polynomial.polyval(complex_grid, dcoef)
            got = gegenbauer_derivative(alpha, n, complex_grid)
            np.testing.assert_allclose(got, expect, rtol=1e-10, atol=1e-10)


def test_recurrence_coefficients_hand_value():
    # alpha = 0, p(2,1): b_1 = sqrt(3)/2 * sqrt(h_0/h_1) = 3/(2 sqrt 5)
    p = make_params(2.0, 1.0)
    a1, b0 = recurrence_coeffs(0.0, p, 0)
    assert b0 == 0.0
    _, b1 = recurrence_coeffs(0.0, p, 1)
    assert b1 == pytest.approx(3.0 / (2.0 * math.sqrt(5.0)), rel=1e-13)


def test_recurrence_coefficients_reconstruct_multiplication(p21, complex_grid):
    """z p_n(z) = a_{n+1} p_{n+1}(z) + b_n p_{n-1}(z) for the orthonormal family."""
    from ellipoly import orthonormal_values

    for alpha in (0.0, 1.5):
        P = orthonormal_values(alpha, p21, 9, complex_grid)
        for n in range(1, 8):
            a_next, b_n = recurrence_coeffs(alpha, p21, n)
            resid = complex_grid * P[n] - a_next * P[n + 1] - b_n * P[n - 1]
            assert np.max(np.abs(resid)) < 1e-11
