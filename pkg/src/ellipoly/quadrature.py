"""Quadrature rules on the ellipse for every supported measure.

The area rules use elliptic coordinates x + iy = (a r cos t, b r sin t):
Gauss-Jacobi in the radial variable (which absorbs the (1 - r^2)^alpha
factor exactly) crossed with a uniform trapezoid rule in angle, which is
exact for the trigonometric harmonics a polynomial integrand produces.
The Chebyshev rules live on the Joukowsky annulus c < |w| < r instead,
and the Jacobi-family rules are pullbacks of an area rule through the
quadratic focal map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from .geometry import (
    EllipseParams,
    Measure,
    MeasureKind,
    base_params,
    derived_params,
    joukowsky,
    quadratic_map,
)
from .polynomials import eval_gegenbauer

__all__ = [
    "QuadratureRule",
    "build_rule",
    "inner_product",
    "moment",
    "lp_norm",
    "contour_check",
]

DEFAULT_N_RADIAL = 96
DEFAULT_N_ANGULAR = 384


@dataclass(frozen=True)
class QuadratureRule:
    """Complex nodes and positive weights approximating integration
    against the measure, in the measure's own convention (normalized
    rules have total weight 1)."""

    measure: Measure
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def mass(self) -> float:
        return float(self.weights.sum())


def _interleave_antipodes(zhalf: np.ndarray, uradial: np.ndarray):
    """Assemble a rule from half an angular period: nodes come out as exact
    antipodal pairs (z, -z) interleaved, so odd-parity integrands cancel
    pairwise exactly in floating point.  uradial holds the per-node weight
    of each radial layer (already divided by the full angular count)."""
    half = zhalf.shape[1]
    nodes = np.stack([zhalf, -zhalf], axis=-1).reshape(zhalf.shape[0], 2 * half)
    weights = np.repeat(uradial[:, None], 2 * half, axis=1)
    return nodes.ravel(), weights.ravel()


def _check_angular(n_angular: int):
    if n_angular < 2 or n_angular % 2:
        raise ValueError("n_angular must be even (antipodal node symmetry)")


def _area_rule(p: EllipseParams, alpha: float, n_radial: int, n_angular: int):
    """Rule for dA_alpha = (1+alpha)(1-h)^alpha dA, total mass 1.

    Radial direction: with t = r^2 the measure is proportional to
    (1-t)^alpha dt on (0, 1), handled by Gauss-Jacobi nodes mapped from
    [-1, 1].  Angular direction: trapezoid over an even count of angles,
    built from half a period and mirrored so antipodes are exact.
    """
    _check_angular(n_angular)
    x, w = roots_jacobi(n_radial, alpha, 0.0)
    t = 0.5 * (x + 1.0)          # r^2 in (0, 1)
    u = w * 2.0 ** (-1.0 - alpha)  # so that sum u = integral of (1-t)^alpha dt
    r = np.sqrt(t)
    theta = 2.0 * np.pi * np.arange(n_angular // 2) / n_angular
    zhalf = p.a * np.outer(r, np.cos(theta)) + 1j * p.b * np.outer(r, np.sin(theta))
    return _interleave_antipodes(zhalf, (1.0 + alpha) * u / n_angular)


def _chebyshev_t_rule(p: EllipseParams, n_radial: int, n_angular: int):
    """Rule for d^2 z / |z^2 - c^2| over the ellipse, via the annulus.

    Under z = (w + c^2/w)/2 the measure becomes d^2 w / |w|^2 on
    c < |w| < r; in polar form (1/s) ds dt, handled by Gauss-Legendre in
    s and the trapezoid in angle (the map is odd, so mirrored w-nodes give
    exact antipodal z-nodes).  Total mass is 2 pi log(r/c).
    """
    _check_angular(n_angular)
    x, w = roots_legendre(n_radial)
    s = 0.5 * (p.r - p.c) * x + 0.5 * (p.r + p.c)
    u = w * 0.5 * (p.r - p.c) / s
    theta = 2.0 * np.pi * np.arange(n_angular // 2) / n_angular
    ws = np.outer(s, np.exp(1j * theta))
    return _interleave_antipodes(joukowsky(p, ws), u * 2.0 * np.pi / n_angular)


def build_rule(measure: Measure,
               n_radial: int = DEFAULT_N_RADIAL,
               n_angular: int = DEFAULT_N_ANGULAR) -> QuadratureRule:
    """Construct a rule for the measure, exact (to roundoff) for polynomial
    integrands of joint degree up to roughly 2 n_radial in |z| and n_angular
    in harmonics."""
    p = measure.params
    kind = measure.kind

    if kind == MeasureKind.AREA_ALPHA:
        nodes, weights = _area_rule(p, measure.alpha, n_radial, n_angular)
        if not measure.normalized:
            weights = weights * measure.flat_factor
        return QuadratureRule(measure, nodes, weights)

    if kind == MeasureKind.FLAT:
        nodes, weights = _area_rule(p, 0.0, n_radial, n_angular)
        return QuadratureRule(measure, nodes, weights * measure.flat_factor)

    if kind in (MeasureKind.B_MINUS, MeasureKind.B_PLUS):
        # Pull the normalized area rule on the base ellipse through
        # w = c (2 (z/c)^2 - 1): the push-forward of dA_alpha is exactly
        # dB_alpha^- of the derived ellipse, so the weights transfer as-is.
        pb = base_params(p)
        znodes, weights = _area_rule(pb, measure.alpha, n_radial, n_angular)
        nodes, _ = quadratic_map(pb, znodes)
        if kind == MeasureKind.B_PLUS:
            # dB^+/dB^- = (2+alpha) |c + w| / a, and c + w = 2 z^2 / c on the
            # image of the base variable, so the density is real and positive.
            weights = weights * (2.0 + measure.alpha) * 2.0 * np.abs(znodes) ** 2 / (p.a * p.c)
        if not measure.normalized:
            weights = weights * measure.flat_factor
        return QuadratureRule(measure, nodes, weights)

    if kind == MeasureKind.CHEBYSHEV_T:
        nodes, weights = _chebyshev_t_rule(p, n_radial, n_angular)
        return QuadratureRule(measure, nodes, weights)

    if kind in (MeasureKind.CHEBYSHEV_V, MeasureKind.CHEBYSHEV_W):
        # d^2 z / |c + z| is the flat form of dB_0^- (alpha = 0); the V rule
        # integrates d^2 z / |c - z|, i.e. the same rule with nodes negated.
        pb = base_params(p)
        znodes, weights = _area_rule(pb, 0.0, n_radial, n_angular)
        nodes, _ = quadratic_map(pb, znodes)
        weights = weights * 2.0 * np.pi * p.b
        if kind == MeasureKind.CHEBYSHEV_V:
            nodes = -nodes
        return QuadratureRule(measure, nodes, weights)

    raise ValueError(f"unknown measure kind {kind}")


def inner_product(f, g, rule: QuadratureRule) -> complex:
    """<f, g> = integral of f(z) conj(g(z)) against the rule's measure.

    f and g may be callables or precomputed arrays over rule.nodes.
    """
    fv = f(rule.nodes) if callable(f) else np.asarray(f)
    gv = g(rule.nodes) if callable(g) else np.asarray(g)
    return complex(np.sum(rule.weights * fv * np.conj(gv)))


def moment(p_exp: int, q_exp: int, rule: QuadratureRule) -> complex:
    """<z^p, z^q> against the rule's measure.

    Powers are built by repeated multiplication (preserving the exact sign
    flip between antipodal nodes) and the terms are totaled with fsum, so
    odd-parity moments over the symmetric rules come out exactly zero.
    """
    if p_exp < 0 or q_exp < 0:
        raise ValueError("moment exponents must be nonnegative")
    zp = np.ones_like(rule.nodes)
    for _ in range(p_exp):
        zp = zp * rule.nodes
    zq = np.ones_like(rule.nodes)
    for _ in range(q_exp):
        zq = zq * rule.nodes
    terms = rule.weights * zp * np.conj(zq)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def lp_norm(f, p_exp: float, rule: QuadratureRule) -> float:
    """(sum_k w_k |f(z_k)|^p)^(1/p) against the rule's measure."""
    if not p_exp > 0:
        raise ValueError("p exponent must be positive")
    fv = f(rule.nodes) if callable(f) else np.asarray(f)
    return float(np.sum(rule.weights * np.abs(fv) ** p_exp) ** (1.0 / p_exp))


def contour_check(p: EllipseParams, n: int, m: int, n_theta: int = 256) -> complex:
    """Contour integral linking the first-kind family to its planar norms:

        I(n, m) = oint_{|w| = r} d/dw [T_{n+1}(z(w)/c)] conj(T_{m+1}(z(w)/c)) dw

    with z(w) = (w + c^2/w)/2.  Evaluated by the trapezoid rule, which is
    exact here since the integrand is a finite Laurent series in w.  The
    closed value is i pi (n+1)/2 [(r/c)^{2n+2} - (c/r)^{2n+2}] delta_{nm}.
    """
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    w = p.r * np.exp(1j * theta)
    z = joukowsky(p, w)
    # d/dw T_{n+1}(z/c) = (n+1) U_n(z/c) * z'(w)/c,  z'(w) = (1 - c^2/w^2)/2.
    un = eval_gegenbauer(0.0, n, z / p.c)
    dT = (n + 1) * un * (1.0 - (p.c / w) ** 2) / (2.0 * p.c)
    # T_{m+1}(z(w)/c) on |w| = r via the Laurent form ((w/c)^k + (c/w)^k)/2.
    k = m + 1
    Tm = 0.5 * ((w / p.c) ** k + (p.c / w) ** k)
    integrand = dT * np.conj(Tm) * 1j * w
    return complex(integrand.mean() * 2.0 * np.pi)
