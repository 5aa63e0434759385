"""Closed-form squared norms, Gram-matrix verification, and Gram-Schmidt.

Every family supported by the library has an explicit squared-norm formula
under its canonical weight on the ellipse; gram_matrix checks the full
Kronecker-delta structure against quadrature.  For weights without a known
basis, gram_schmidt orthonormalizes the monomials directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    EllipseParams,
    Measure,
    MeasureKind,
    area_measure,
    b_minus_measure,
    b_plus_measure,
    chebyshev_t_measure,
    chebyshev_v_measure,
    chebyshev_w_measure,
    flat_measure,
)
from .polynomials import (
    FamilyKind,
    PolynomialFamily,
    eval_gegenbauer,
    eval_terminating_2f1,
    family_matrix,
    gegenbauer_norm,
    lnpoch,
)
from .quadrature import DEFAULT_N_ANGULAR, DEFAULT_N_RADIAL, QuadratureRule, build_rule

__all__ = [
    "GramResult",
    "canonical_measure",
    "closed_norm",
    "gram_matrix",
    "gram_schmidt",
    "monic_factor",
    "orthonormal_factor",
    "log_monic_norm",
    "monic_norm",
]

_CANONICAL_NORMALIZED = {
    FamilyKind.GEGENBAUER: True,
    FamilyKind.LEGENDRE: True,
    FamilyKind.JACOBI_HALF: True,
    FamilyKind.CHEBYSHEV_T: False,
    FamilyKind.CHEBYSHEV_U: False,
    FamilyKind.CHEBYSHEV_V: False,
    FamilyKind.CHEBYSHEV_W: False,
}


def canonical_measure(family: PolynomialFamily, p: EllipseParams) -> Measure:
    """The weight on the ellipse under which the family is orthogonal.

    Area-type weights come back in the normalized (unit-mass) convention,
    the singular Chebyshev weights in the flat d^2z convention.
    """
    k = family.kind
    if k == FamilyKind.GEGENBAUER:
        return area_measure(p, family.alpha)
    if k == FamilyKind.LEGENDRE:
        return area_measure(p, -0.5)
    if k == FamilyKind.JACOBI_HALF:
        if family.sign == -1:
            return b_minus_measure(p, family.alpha)
        return b_plus_measure(p, family.alpha)
    if k == FamilyKind.CHEBYSHEV_T:
        return chebyshev_t_measure(p)
    if k == FamilyKind.CHEBYSHEV_U:
        return flat_measure(p)
    if k == FamilyKind.CHEBYSHEV_V:
        return chebyshev_v_measure(p)
    if k == FamilyKind.CHEBYSHEV_W:
        return chebyshev_w_measure(p)
    raise ValueError(f"{k.value} has no canonical planar weight")


def closed_norm(family: PolynomialFamily, p: EllipseParams, n: int,
                normalized: bool | None = None) -> float:
    """Squared norm of the degree-n family member (argument z/c) under its
    canonical weight on the ellipse described by p.

    With normalized=None each family reports in its canonical convention
    (unit-mass measure for the area-type weights, flat d^2z for Chebyshev);
    pass True/False to force a convention, converted via Measure.flat_factor.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    k = family.kind
    if k not in _CANONICAL_NORMALIZED:
        raise ValueError(f"no closed norm for family {k.value}")

    if k == FamilyKind.GEGENBAUER:
        value = gegenbauer_norm(family.alpha, p, n)
    elif k == FamilyKind.LEGENDRE:
        value = gegenbauer_norm(-0.5, p, n)
    elif k == FamilyKind.JACOBI_HALF:
        value = _jacobi_half_norm(family.alpha, family.sign, p, n)
    else:
        value = _chebyshev_norm(k, p, n)

    canonical = _CANONICAL_NORMALIZED[k]
    if normalized is None or normalized == canonical:
        return value
    factor = canonical_measure(family, p).flat_factor
    return value * factor if canonical else value / factor


def _jacobi_half_norm(alpha: float, sign: int, p: EllipseParams, n: int) -> float:
    """Norms of P_n^{(alpha+1/2, -1/2)} under dB^- and P_n^{(alpha+1/2, +1/2)}
    under dB^+, both normalized; a and c are those of the measure's own
    ellipse (for the image of a quadratic focal map, the derived one)."""
    x = p.a / p.c
    if sign == -1:
        lr = 2.0 * (lnpoch(0.5, n) - lnpoch(alpha + 1.0, n))
        cn = eval_gegenbauer(alpha, 2 * n, x).real
        return math.exp(lr) * (1.0 + alpha) / (1.0 + alpha + 2 * n) * cn
    lr = 2.0 * (lnpoch(0.5, n + 1) - lnpoch(alpha + 1.0, n + 1))
    cn = eval_gegenbauer(alpha, 2 * n + 1, x).real
    pref = 2.0 * p.c * (1.0 + alpha) * (2.0 + alpha) / (p.a * (2.0 + alpha + 2 * n))
    return pref * math.exp(lr) * cn


def _chebyshev_norm(kind: FamilyKind, p: EllipseParams, n: int) -> float:
    """Flat-d^2z norms over the ellipse of T, U, V, W at argument z/c.

    T pairs with d^2z/|z^2-c^2|, U with plain d^2z, and the third/fourth
    kinds with d^2z/|c -+ z| (V with |c-z|, W with |c+z|).
    """
    q = p.r / p.c
    if kind == FamilyKind.CHEBYSHEV_T:
        if n == 0:
            return 2.0 * math.pi * math.log(q)
        return math.pi / (4.0 * n) * (q ** (2 * n) - q ** (-2 * n))
    if kind == FamilyKind.CHEBYSHEV_U:
        return math.pi * p.c ** 2 / (4.0 * (n + 1)) * (q ** (2 * n + 2) - q ** (-2 * n - 2))
    # V and W share the same norm; the weights are mirror images.
    return math.pi * p.c / (1.0 + 2 * n) * (q ** (2 * n + 1) - q ** (-2 * n - 1))


@dataclass(frozen=True)
class GramResult:
    """Gram matrix of a family under a measure, with closed-form comparison.

    matrix[n, m] = <f_n(./c), f_m(./c)> under the measure's convention;
    closed_diag / diag_relative_errors are populated only when the pairing
    has a known closed norm.
    """

    family: PolynomialFamily
    measure: Measure
    nmax: int
    matrix: np.ndarray
    max_offdiag: float
    diag: np.ndarray
    closed_diag: np.ndarray | None
    diag_relative_errors: np.ndarray | None
    n_radial: int
    n_angular: int

    @property
    def max_diag_error(self) -> float:
        if self.diag_relative_errors is None:
            raise ValueError("no closed-form diagonal for this pairing")
        return float(np.max(self.diag_relative_errors))


def _is_canonical(family: PolynomialFamily, measure: Measure) -> bool:
    try:
        canon = canonical_measure(family, measure.params)
    except ValueError:
        return False
    return canon.kind == measure.kind and (canon.alpha == measure.alpha)


def gram_matrix(family: PolynomialFamily, measure: Measure, nmax: int,
                rule: QuadratureRule | None = None,
                n_radial: int = DEFAULT_N_RADIAL,
                n_angular: int = DEFAULT_N_ANGULAR) -> GramResult:
    """Full Gram matrix of family members 0..nmax (argument z/c) under the
    measure, by quadrature; conjugate symmetry is enforced exactly."""
    if rule is None:
        rule = build_rule(measure, n_radial=n_radial, n_angular=n_angular)
    elif rule.measure != measure:
        raise ValueError("rule was built for a different measure")
    p = measure.params
    vals = family_matrix(family, nmax, rule.nodes / p.c)
    G = np.einsum("k,ik,jk->ij", rule.weights, vals, vals.conj())
    G = 0.5 * (G + G.conj().T)
    diag = np.diag(G).real.copy()
    off = G - np.diag(np.diag(G))
    max_offdiag = float(np.abs(off).max()) if nmax > 0 else 0.0

    closed_diag = None
    rel = None
    if _is_canonical(family, measure):
        closed_diag = np.array([
            closed_norm(family, p, n, normalized=measure.normalized)
            for n in range(nmax + 1)
        ])
        rel = np.abs(diag - closed_diag) / np.abs(closed_diag)
    return GramResult(family=family, measure=measure, nmax=nmax, matrix=G,
                      max_offdiag=max_offdiag, diag=diag, closed_diag=closed_diag,
                      diag_relative_errors=rel,
                      n_radial=n_radial, n_angular=n_angular)


def gram_schmidt(measure: Measure, nmax: int,
                 rule: QuadratureRule | None = None) -> list[np.ndarray]:
    """Orthonormal polynomials under the measure by modified Gram-Schmidt
    on the monomials, with one reorthogonalization pass.

    Returns coefficient vectors: entry n holds the coefficients of
    z^0 .. z^n of p_n, with real positive leading coefficient, and
    <p_n, p_m> = delta under the measure.  The moment matrix is prescaled
    by its diagonal to tame conditioning; a numerically rank-deficient
    moment matrix raises LinAlgError.
    """
    if rule is None:
        rule = build_rule(measure)
    z = rule.nodes
    P = z[None, :] ** np.arange(nmax + 1)[:, None]
    M = np.einsum("k,ik,jk->ij", rule.weights, P, P.conj())
    M = 0.5 * (M + M.conj().T)
    d = np.sqrt(np.diag(M).real)
    if not np.all(d > 0.0):
        raise np.linalg.LinAlgError("moment matrix has nonpositive diagonal")
    Ms = M / np.outer(d, d)

    basis = np.zeros((nmax + 1, nmax + 1), dtype=complex)
    for n in range(nmax + 1):
        v = np.zeros(nmax + 1, dtype=complex)
        v[n] = 1.0
        for _ in range(2):
            for l in range(n):
                v = v - (basis[:, l].conj() @ (Ms @ v)) * basis[:, l]
        nrm2 = (v.conj() @ (Ms @ v)).real
        if nrm2 <= 1e-24:
            raise np.linalg.LinAlgError(
                f"moment matrix numerically rank-deficient at degree {n}")
        basis[:, n] = v / math.sqrt(nrm2)

    out = []
    for n in range(nmax + 1):
        coeffs = basis[: n + 1, n] / d[: n + 1]
        lead = coeffs[n]
        coeffs = coeffs * (abs(lead) / lead)
        out.append(coeffs)
    return out


def monic_factor(alpha: float, p: EllipseParams, n: int) -> float:
    """Factor turning C_n^{(1+alpha)}(z/c) into the monic polynomial in z:

        ptilde_n(z) = n! c^n / (2^n (1+alpha)_n) * C_n^{(1+alpha)}(z/c).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return math.exp(math.lgamma(n + 1) + n * math.log(p.c / 2.0) - lnpoch(1.0 + alpha, n))


def orthonormal_factor(alpha: float, p: EllipseParams, n: int) -> float:
    """Factor turning C_n^{(1+alpha)}(z/c) into the unit-norm polynomial."""
    return 1.0 / math.sqrt(gegenbauer_norm(alpha, p, n))


def log_monic_norm(alpha: float, p: EllipseParams, n: int,
                   method: str = "gegenbauer") -> float:
    """log of the squared norm of the monic polynomial ptilde_n under dA_alpha.

    Two independent routes agree to roundoff:
      - 'gegenbauer': rescale the Gegenbauer norm by the monic factor;
      - 'hypergeometric': the Gamma-ratio/terminating-2F1 closed form
        evaluated at -b^2/c^2, whose series terms are all positive.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if method == "gegenbauer":
        return 2.0 * math.log(monic_factor(alpha, p, n)) + math.log(
            gegenbauer_norm(alpha, p, n))
    if method == "hypergeometric":
        f = eval_terminating_2f1(n, 2.0 + 2.0 * alpha + n, alpha + 1.5,
                                 -(p.b / p.c) ** 2)
        return (2.0 * n * math.log(p.c / 2.0)
                + 0.5 * math.log(math.pi)
                + math.lgamma(2.0 + alpha)
                + math.lgamma(2.0 + 2.0 * alpha + n)
                + math.lgamma(n + 1.0)
                - (2.0 * alpha + 1.0) * math.log(2.0)
                - math.lgamma(alpha + 1.5)
                - math.lgamma(1.0 + alpha + n)
                - math.lgamma(2.0 + alpha + n)
                + math.log(f))
    raise ValueError(f"unknown method {method!r}")


def monic_norm(alpha: float, p: EllipseParams, n: int,
               method: str = "gegenbauer") -> float:
    """Squared norm htilde_n of the monic polynomial under dA_alpha."""
    return math.exp(log_monic_norm(alpha, p, n, method=method))
