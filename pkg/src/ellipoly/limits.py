"""Limiting regimes of the planar Gegenbauer family, run as convergence
experiments over parameter sequences.

Three degenerations are covered: alpha -> infinity (rescaled inner products
approach the planar Hermite orthogonality), b -> a (the ellipse fills out to
a disc and the monic polynomials degenerate to monomials, the
truncated-unitary regime), and b -> 0 (the measure collapses onto [-a, a]
and the planar inner products approach the classical real-line Gegenbauer
orthogonality).  Each experiment reports the residual at every step of the
sequence; the verdict requires the residuals to decrease and the final one
to beat the tolerance, with an explicit noise floor so that entries that are
exactly zero by parity or orthogonality do not flip the monotonicity check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.special import roots_jacobi

from .geometry import EllipseParams, area_measure, make_params
from .norms import monic_factor
from .polynomials import gegenbauer_matrix, lnpoch
from .quadrature import DEFAULT_N_ANGULAR, DEFAULT_N_RADIAL, build_rule

__all__ = [
    "LimitRegime",
    "LimitReport",
    "hermite_limit",
    "disc_limit",
    "realline_limit",
    "realline_constant",
    "disc_reference",
]


class LimitRegime(Enum):
    HERMITE_PLANE = "hermite_plane"
    DISC_TRUNCATED_UNITARY = "disc_truncated_unitary"
    REAL_LINE = "real_line"


@dataclass(frozen=True)
class LimitReport:
    """Convergence record for one (n, m) entry along a parameter sequence.

    residuals[k] compares values[k] to target: relative on the diagonal
    when the target is nonzero, absolute otherwise (disc_limit uses
    absolute residuals throughout; see its docstring).  verdict is True
    when the residual sequence decreases step to step (pairs below the
    noise floor are exempt) and the final residual is within tolerance.
    """

    regime: LimitRegime
    n: int
    m: int
    parameters: tuple[float, ...]
    values: tuple[complex, ...]
    target: complex
    residuals: tuple[float, ...]
    tolerance: float
    noise_floor: float
    verdict: bool
    extras: dict = field(default_factory=dict)


def _verdict(residuals, tol: float, floor: float) -> bool:
    ok_final = residuals[-1] <= tol
    for prev, cur in zip(residuals, residuals[1:]):
        if cur >= prev and not (cur <= floor and prev <= floor):
            return False
    return ok_final


def _entry_residual(value: complex, target: complex, diagonal: bool) -> float:
    """Relative residual on the diagonal (target is a closed nonzero limit),
    absolute off it (the limiting value is an exact zero)."""
    if diagonal:
        return abs(value - target) / abs(target)
    return abs(value - target)


def hermite_limit(p: EllipseParams, n: int, m: int, alpha_sequence,
                  tolerance: float = 1e-2, noise_floor: float = 1e-8,
                  n_radial: int = DEFAULT_N_RADIAL,
                  n_angular: int = DEFAULT_N_ANGULAR) -> LimitReport:
    """alpha -> infinity: the rescaled Gegenbauer inner products

        I_nm(alpha) = pi a b n! m! (1+alpha)^{-(n+m)/2} <C_n(z/c), C_m(z/c)>_alpha

    approach pi n! a b (2 x_star)^n delta_nm, at rate O(1/alpha).  Residuals
    are relative on the diagonal, absolute off it (the target vanishes).

    Same-parity off-diagonal entries are exact zeros of the measure, so their
    computed residuals are quadrature roundoff, which grows with the basis
    magnitude (roughly (1+alpha)^n, about 1e-10 at alpha = 1e3).  The noise
    floor exempts those entries from the monotone-decrease requirement.
    """
    alphas = tuple(float(t) for t in alpha_sequence)
    if len(alphas) < 2 or any(t2 <= t1 for t1, t2 in zip(alphas, alphas[1:])):
        raise ValueError("alpha_sequence must be strictly increasing")
    target = math.pi * math.exp(math.lgamma(n + 1)) * p.a * p.b \
        * (2.0 * p.x_star) ** n if n == m else 0.0

    values = []
    for alpha in alphas:
        rule = build_rule(area_measure(p, alpha), n_radial=n_radial,
                          n_angular=n_angular)
        C = gegenbauer_matrix(alpha, max(n, m), rule.nodes / p.c)
        g = np.sum(rule.weights * C[n] * np.conj(C[m]))
        scale = math.pi * p.a * p.b * math.exp(
            math.lgamma(n + 1) + math.lgamma(m + 1)
            - 0.5 * (n + m) * math.log1p(alpha))
        values.append(complex(scale * g))
    residuals = tuple(_entry_residual(v, target, n == m) for v in values)
    return LimitReport(regime=LimitRegime.HERMITE_PLANE, n=n, m=m,
                       parameters=alphas, values=tuple(values), target=target,
                       residuals=residuals, tolerance=tolerance,
                       noise_floor=noise_floor,
                       verdict=_verdict(residuals, tolerance, noise_floor),
                       extras={"residual_kind": "relative diag / absolute offdiag",
                               "rate": "O(1/alpha)"})


def disc_reference(a: float, alpha: float, n: int, m: int,
                   n_radial: int = DEFAULT_N_RADIAL,
                   n_angular: int = DEFAULT_N_ANGULAR) -> complex:
    """<z^n, z^m> on the disc |z| < a under (1+alpha)(1-|z/a|^2)^alpha dA,
    by polar-coordinate quadrature (Gauss-Jacobi radially, trapezoid in
    angle).  The closed diagonal is
    Gamma(n+1) Gamma(1+alpha) (1+alpha) a^{2n} / (Gamma(1+alpha+n)(1+alpha+n)).
    """
    x, w = roots_jacobi(n_radial, alpha, 0.0)
    t = 0.5 * (x + 1.0)
    u = w * 2.0 ** (-1.0 - alpha) * (1.0 + alpha)
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    r = a * np.sqrt(t)
    z = np.outer(r, np.exp(1j * theta)).ravel()
    wts = (u / n_angular)[:, None] * np.ones(n_angular)
    return complex(np.sum(wts.ravel() * z ** n * np.conj(z) ** m))


def disc_limit(a: float, n: int, m: int, alpha: float, b_sequence,
               tolerance: float = 1e-3, noise_floor: float = 1e-12,
               n_radial: int = DEFAULT_N_RADIAL,
               n_angular: int = DEFAULT_N_ANGULAR) -> LimitReport:
    """b -> a: the monic inner products <ptilde_n, ptilde_m> under dA_alpha
    on the ellipse (a, b) approach the disc moments <z^n, z^m> of radius a
    (the monic polynomials degenerate to monomials; truncated-unitary
    regime).  The disc reference is computed by polar quadrature.

    Residuals are absolute: the diagonal converges at rate ~ n (1 - b/a),
    which the prefactor-free absolute error tracks cleanly while every
    off-diagonal entry is an exact zero on both sides.
    """
    bs = tuple(float(t) for t in b_sequence)
    if len(bs) < 2 or any(t2 <= t1 for t1, t2 in zip(bs, bs[1:])):
        raise ValueError("b_sequence must be strictly increasing toward a")
    if bs[-1] >= a:
        raise ValueError("b_sequence must stay below a")
    target = disc_reference(a, alpha, n, m, n_radial, n_angular)

    values = []
    for b in bs:
        p = make_params(a, b)
        rule = build_rule(area_measure(p, alpha), n_radial=n_radial,
                          n_angular=n_angular)
        C = gegenbauer_matrix(alpha, max(n, m), rule.nodes / p.c)
        fn = monic_factor(alpha, p, n)
        fm = monic_factor(alpha, p, m)
        values.append(complex(fn * fm * np.sum(rule.weights * C[n] * np.conj(C[m]))))
    residuals = tuple(abs(v - target) for v in values)
    closed_diag = math.exp(math.lgamma(n + 1) + math.lgamma(1.0 + alpha)
                           + math.log1p(alpha) + 2 * n * math.log(a)
                           - math.lgamma(1.0 + alpha + n)
                           - math.log(1.0 + alpha + n)) if n == m else 0.0
    return LimitReport(regime=LimitRegime.DISC_TRUNCATED_UNITARY, n=n, m=m,
                       parameters=bs, values=tuple(values), target=target,
                       residuals=residuals, tolerance=tolerance,
                       noise_floor=noise_floor,
                       verdict=_verdict(residuals, tolerance, noise_floor),
                       extras={"residual_kind": "absolute",
                               "closed_diagonal": closed_diag,
                               "rate": "O(n (1 - b/a)) relative on the diagonal"})


def realline_constant(alpha: float) -> float:
    """The collapse constant sqrt(pi) Gamma(1+alpha) / (2 Gamma(alpha+3/2)),
    i.e. half the Beta-integral of (1-u^2)^alpha; equals the Gauss value
    F(1/2, -alpha; 3/2; 1)."""
    return 0.5 * math.sqrt(math.pi) * math.exp(
        math.lgamma(1.0 + alpha) - math.lgamma(alpha + 1.5))


def realline_limit(a: float, n: int, m: int, alpha: float, b_sequence,
                   tolerance: float = 1e-2, noise_floor: float = 1e-10,
                   n_radial: int = DEFAULT_N_RADIAL,
                   n_angular: int = DEFAULT_N_ANGULAR,
                   n_oracle: int = 200) -> LimitReport:
    """b -> 0: the planar inner products <C_n(z/c), C_m(z/c)>_alpha approach

        (2 (1+alpha)/pi) F(1/2, -alpha; 3/2; 1) *
            integral_{-1}^{1} C_n(x) C_m(x) (1 - x^2)^{alpha+1/2} dx,

    the classical real-line Gegenbauer orthogonality.  The reference
    integral is evaluated independently by 1-D Gauss-Jacobi quadrature with
    weight (1-x^2)^{alpha+1/2}.  Residuals are relative on the diagonal
    (rate O(b^2) with an n-dependent constant), absolute off it.
    """
    bs = tuple(float(t) for t in b_sequence)
    if len(bs) < 2 or any(t2 >= t1 for t1, t2 in zip(bs, bs[1:])):
        raise ValueError("b_sequence must be strictly decreasing toward 0")
    if bs[0] >= a:
        raise ValueError("b_sequence must stay below a")

    x1, w1 = roots_jacobi(n_oracle, alpha + 0.5, alpha + 0.5)
    C1 = gegenbauer_matrix(alpha, max(n, m), x1.astype(complex)).real
    oracle = float(np.sum(w1 * C1[n] * C1[m]))
    # The classical real-line family is exactly orthogonal: off the diagonal
    # the limit is an exact zero (the oracle only confirms it to roundoff).
    target = 2.0 * (1.0 + alpha) / math.pi * realline_constant(alpha) * oracle \
        if n == m else 0.0

    values = []
    for b in bs:
        p = make_params(a, b)
        rule = build_rule(area_measure(p, alpha), n_radial=n_radial,
                          n_angular=n_angular)
        C = gegenbauer_matrix(alpha, max(n, m), rule.nodes / p.c)
        values.append(complex(np.sum(rule.weights * C[n] * np.conj(C[m]))))
    residuals = tuple(_entry_residual(v, target, n == m) for v in values)
    closed_diag = (1.0 + alpha) / (1.0 + alpha + n) * math.exp(
        lnpoch(2.0 + 2.0 * alpha, n) - math.lgamma(n + 1)) if n == m else 0.0
    return LimitReport(regime=LimitRegime.REAL_LINE, n=n, m=m,
                       parameters=bs, values=tuple(values), target=target,
                       residuals=residuals, tolerance=tolerance,
                       noise_floor=noise_floor,
                       verdict=_verdict(residuals, tolerance, noise_floor),
                       extras={"residual_kind": "relative diag / absolute offdiag",
                               "oracle_nodes": n_oracle,
                               "closed_diagonal": closed_diag,
                               "rate": "O(b^2) with constant growing in n"})
