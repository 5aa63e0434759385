"""Bergman kernel, Christoffel transformation, and recurrence structure.

The orthonormal planar Gegenbauer basis satisfies a genuine three-term
recurrence (its multiplication matrix is banded); inserting a point charge
|v - z|^2 into the weight produces the Christoffel-transformed basis, whose
multiplication matrix has no finite band for b > 0.  The Turan determinant
of the Gegenbauer family at x_star is the scalar obstruction behind this.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import EllipseParams, area_measure
from .norms import monic_factor, monic_norm
from .polynomials import gegenbauer_matrix, gegenbauer_norm, lnpoch, recurrence_coeffs
from .quadrature import DEFAULT_N_ANGULAR, DEFAULT_N_RADIAL, build_rule

__all__ = [
    "GegenbauerBasis",
    "ChristoffelBasis",
    "HessenbergMatrix",
    "orthonormal_values",
    "bergman_kernel",
    "christoffel_poly",
    "christoffel_values",
    "christoffel_norm_monic",
    "christoffel_entry_closed",
    "hessenberg",
    "bandwidth",
    "turan_determinant",
    "heine_check",
]


@dataclass(frozen=True)
class GegenbauerBasis:
    """Orthonormal basis p_n = C_n^{(1+alpha)}(z/c)/sqrt(h_n) under dA_alpha."""

    alpha: float
    params: EllipseParams

    def __post_init__(self):
        if not self.alpha > -1.0:
            raise ValueError(f"alpha must exceed -1, got {self.alpha}")


@dataclass(frozen=True)
class ChristoffelBasis:
    """Orthonormal basis under the point-charge weight |v - z|^2 dA_alpha.

    v may lie inside or outside the ellipse; the kernel values kappa_N(v, vbar)
    are strictly positive either way.  nmax caps the degrees the basis will
    evaluate (kernel sums need Gegenbauer values up to nmax + 2).
    """

    alpha: float
    params: EllipseParams
    v: complex
    nmax: int = 24

    def __post_init__(self):
        if not self.alpha > -1.0:
            raise ValueError(f"alpha must exceed -1, got {self.alpha}")
        if self.nmax < 0:
            raise ValueError("nmax must be nonnegative")


def orthonormal_values(alpha: float, p: EllipseParams, nmax: int, z) -> np.ndarray:
    """Matrix of orthonormal basis values p_k(z), k = 0..nmax; rows are degrees."""
    zz = np.asarray(z, dtype=complex)
    C = gegenbauer_matrix(alpha, nmax, zz / p.c)
    h = np.array([gegenbauer_norm(alpha, p, k) for k in range(nmax + 1)])
    return C / np.sqrt(h).reshape((nmax + 1,) + (1,) * zz.ndim)


def _orthonormal_derivatives(alpha: float, p: EllipseParams, nmax: int, z) -> np.ndarray:
    """d/dz of the orthonormal basis, via C_n' = 2(1+alpha) C_{n-1}^{(2+alpha)}."""
    zz = np.asarray(z, dtype=complex)
    out = np.zeros((nmax + 1,) + zz.shape, dtype=complex)
    if nmax >= 1:
        Cup = gegenbauer_matrix(alpha + 1.0, nmax - 1, zz / p.c)
        h = np.array([gegenbauer_norm(alpha, p, k) for k in range(nmax + 1)])
        scale = 2.0 * (1.0 + alpha) / (p.c * np.sqrt(h[1:]))
        out[1:] = scale.reshape((nmax,) + (1,) * zz.ndim) * Cup
    return out


def bergman_kernel(alpha: float, p: EllipseParams, N: int, z, w) -> complex:
    """Truncated reproducing kernel kappa_N(z, wbar) = sum_{i<N} p_i(z) conj(p_i(w)).

    Hermitian in (z, w); scalar in, scalar out, and broadcasts over arrays.
    """
    if N < 1:
        raise ValueError("kernel truncation N must be >= 1")
    zb, wb = np.broadcast_arrays(np.asarray(z), np.asarray(w))
    Pz = orthonormal_values(alpha, p, N - 1, zb)
    Pw = orthonormal_values(alpha, p, N - 1, wb)
    val = np.sum(Pz * Pw.conj(), axis=0)
    return complex(val) if np.ndim(val) == 0 else val


def _charge_values(basis: ChristoffelBasis, through: int):
    """p_k(v) for k <= through and the kernel ladder kappa_i = sum_{j<i}|p_j(v)|^2."""
    pv = orthonormal_values(basis.alpha, basis.params, through, basis.v)
    kappa = np.concatenate(([0.0], np.cumsum(np.abs(pv) ** 2)))
    return pv, kappa


def christoffel_values(basis: ChristoffelBasis, nmax: int, z) -> np.ndarray:
    """Values of the Christoffel-transformed orthonormal family P(1)_0..P(1)_nmax.

    P(1)_N(z) = [kappa_{N+1}(z, vbar) p_{N+1}(v) - kappa_{N+1}(v, vbar) p_{N+1}(z)]
                / [(v - z) sqrt(kappa_{N+1} kappa_{N+2})],

    with the removable singularity at z = v filled by the derivative form
    whenever |z - v| < 1e-8.
    """
    if nmax > basis.nmax:
        raise ValueError(f"degree {nmax} exceeds basis cap {basis.nmax}")
    alpha, p, v = basis.alpha, basis.params, basis.v
    zz = np.asarray(z, dtype=complex)
    scalar = zz.ndim == 0
    zz = np.atleast_1d(zz)

    pv, kv = _charge_values(basis, nmax + 1)
    Pz = orthonormal_values(alpha, p, nmax + 1, zz)
    # Kz[i] = kappa_{i+1}(z, vbar) = sum_{j<=i} p_j(z) conj(p_j(v))
    Kz = np.cumsum(Pz * pv.conj()[:, None], axis=0)

    idx = np.arange(nmax + 1)
    denom = (v - zz)[None, :] * np.sqrt(kv[idx + 1] * kv[idx + 2])[:, None]
    numer = Kz[idx] * pv[idx + 1][:, None] - kv[idx + 1][:, None] * Pz[idx + 1]

    near = np.abs(zz - v) < 1e-8
    if np.any(near):
        zn = zz[near]
        Dn = _orthonormal_derivatives(alpha, p, nmax + 1, zn)
        Kd = np.cumsum(Dn * pv.conj()[:, None], axis=0)
        # limit of the quotient at z = v:
        # [kappa_{N+1} p'_{N+1}(z) - kappa'_{N+1}(z, vbar) p_{N+1}(v)]
        #   / sqrt(kappa_{N+1} kappa_{N+2})
        lim = (kv[idx + 1][:, None] * Dn[idx + 1] - Kd[idx] * pv[idx + 1][:, None]) \
            / np.sqrt(kv[idx + 1] * kv[idx + 2])[:, None]
        out = np.empty_like(numer)
        safe = ~near
        out[:, safe] = numer[:, safe] / denom[:, safe]
        out[:, near] = lim
    else:
        out = numer / denom
    return out[:, 0] if scalar else out


def christoffel_poly(basis: ChristoffelBasis, N: int, z):
    """The degree-N Christoffel-transformed orthonormal polynomial at z."""
    if N < 0:
        raise ValueError("degree must be nonnegative")
    vals = christoffel_values(basis, N, z)
    val = vals[N]
    return complex(val) if np.ndim(val) == 0 else val


def christoffel_norm_monic(basis: ChristoffelBasis, N: int) -> float:
    """Squared norm of the monic Christoffel polynomial under |v-z|^2 dA_alpha:

        htilde(1)_N = htilde_{N+1} kappa_{N+2}(v, vbar) / kappa_{N+1}(v, vbar).
    """
    if N < 0:
        raise ValueError("degree must be nonnegative")
    _, kv = _charge_values(basis, N + 1)
    return monic_norm(basis.alpha, basis.params, N + 1) * kv[N + 2] / kv[N + 1]


@dataclass(frozen=True)
class HessenbergMatrix:
    """Multiplication-by-z matrix c_{l,n} = <z p_n, p_l> in an orthonormal basis.

    Dense storage: entries has shape (nmax+1, nmax), column n holding
    c_{l,n} for l = 0..nmax; entries with l > n+1 vanish structurally
    (multiplication raises degree by one).
    """

    basis_label: str
    nmax: int
    entries: np.ndarray
    strategy: str

    def column_norms(self) -> np.ndarray:
        return np.sqrt(np.sum(np.abs(self.entries) ** 2, axis=0))


def _hessenberg_gegenbauer_closed(basis: GegenbauerBasis, nmax: int) -> np.ndarray:
    entries = np.zeros((nmax + 1, nmax), dtype=complex)
    for n in range(nmax):
        a_next, b_n = recurrence_coeffs(basis.alpha, basis.params, n)
        entries[n + 1, n] = a_next
        if n >= 1:
            entries[n - 1, n] = b_n
    return entries


def _charged_area_rule(basis: ChristoffelBasis, n_radial: int, n_angular: int):
    rule = build_rule(area_measure(basis.params, basis.alpha),
                      n_radial=n_radial, n_angular=n_angular)
    w = rule.weights * np.abs(basis.v - rule.nodes) ** 2
    return rule.nodes, w


def hessenberg(basis, nmax: int, strategy: str = "auto",
               n_radial: int = DEFAULT_N_RADIAL,
               n_angular: int = DEFAULT_N_ANGULAR) -> HessenbergMatrix:
    """Hessenberg matrix of multiplication by z in the given orthonormal basis.

    For the plain Gegenbauer basis the closed three-term coefficients are
    used ('closed', the default); 'quadrature' recomputes every entry from
    the Gram integrals.  The Christoffel basis always uses quadrature under
    the charged weight |v - z|^2 dA_alpha.
    """
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    if isinstance(basis, GegenbauerBasis):
        if strategy in ("auto", "closed"):
            return HessenbergMatrix(
                basis_label=f"gegenbauer(alpha={basis.alpha})",
                nmax=nmax,
                entries=_hessenberg_gegenbauer_closed(basis, nmax),
                strategy="closed")
        if strategy != "quadrature":
            raise ValueError(f"unknown strategy {strategy!r}")
        rule = build_rule(area_measure(basis.params, basis.alpha),
                          n_radial=n_radial, n_angular=n_angular)
        nodes, weights = rule.nodes, rule.weights
        P = orthonormal_values(basis.alpha, basis.params, nmax, nodes)
        label = f"gegenbauer(alpha={basis.alpha})"
    elif isinstance(basis, ChristoffelBasis):
        if strategy not in ("auto", "quadrature"):
            raise ValueError("christoffel entries are only available by quadrature")
        if nmax > basis.nmax:
            raise ValueError(f"nmax {nmax} exceeds basis cap {basis.nmax}")
        nodes, weights = _charged_area_rule(basis, n_radial, n_angular)
        P = christoffel_values(basis, nmax, nodes)
        label = f"christoffel(alpha={basis.alpha}, v={basis.v})"
    else:
        raise TypeError(f"unsupported basis {type(basis).__name__}")

    zP = nodes[None, :] * P[:nmax]
    entries = np.einsum("k,lk,nk->ln", weights, P.conj(), zP)
    return HessenbergMatrix(basis_label=label, nmax=nmax, entries=entries,
                            strategy="quadrature")


def bandwidth(H: HessenbergMatrix, tol: float) -> int:
    """Smallest d such that |c_{l,n}| <= tol * ||column n|| for all l < n+1-d;
    nmax+1 when no finite band exists at this tolerance."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    norms = H.column_norms()
    for d in range(H.nmax + 2):
        ok = True
        for n in range(H.nmax):
            top = n + 1 - d
            if top > 0 and np.any(np.abs(H.entries[:top, n]) > tol * norms[n]):
                ok = False
                break
        if ok:
            return d
    return H.nmax + 1


def christoffel_entry_closed(basis: ChristoffelBasis, l: int, n: int) -> complex:
    """Closed form of the Hessenberg entry c_{l,n} of the Christoffel basis on
    its non-banded range l <= n-2, built from charge values p_i(v), kernel
    values kappa_i, and the plain-basis recurrence coefficients a_i, b_i.
    """
    if l < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if l > n - 2:
        raise ValueError("closed entry is only defined for l <= n-2")
    alpha, p, v = basis.alpha, basis.params, basis.v
    pv, kv = _charge_values(basis, n + 2)

    def ab(k: int) -> tuple[float, float]:
        return recurrence_coeffs(alpha, p, k)

    a_l1, b_l = ab(l)          # a_{l+1}, b_l (b_0 = 0)
    _, b_l1 = ab(l + 1)        # b_{l+1}
    _, b_l2 = ab(l + 2)        # b_{l+2}
    pi = pv                    # pi_k = p_k(v)
    pim1 = pi[l - 1] if l >= 1 else 0j

    inner = ((v * kv[l] + b_l * pim1 * np.conj(pi[l])
              + b_l1 * pi[l] * np.conj(pi[l + 1])) * np.conj(pi[l + 1])
             - (a_l1 * np.conj(pi[l]) + b_l2 * np.conj(pi[l + 2])) * kv[l + 1])
    pref = pi[n + 1] / math.sqrt(kv[n + 1] * kv[n + 2] * kv[l + 1] * kv[l + 2])
    return complex(pref * inner)


def turan_determinant(alpha: float, l: int, x: float) -> float:
    """Normalized Turan determinant of the Gegenbauer family,

        Delta_l(x) = (C_{l+1}(x)/C_{l+1}(1))^2 - C_l(x) C_{l+2}(x)/(C_l(1) C_{l+2}(1)),

    with C = C^{(1+alpha)}.  Vanishes exactly at x = +-1 and nowhere else on
    the real line; its nonvanishing at x_star > 1 is what breaks every
    candidate finite-term recurrence for the charged weight.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if not alpha > -1.0:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    C = gegenbauer_matrix(alpha, l + 2, np.array(float(x))).real
    # C_k(1) = (2+2alpha)_k / k!
    ln1 = [lnpoch(2.0 + 2.0 * alpha, k) - math.lgamma(k + 1) for k in (l, l + 1, l + 2)]
    t1 = C[l + 1] / math.exp(ln1[1])
    t0 = C[l] / math.exp(ln1[0])
    t2 = C[l + 2] / math.exp(ln1[2])
    return float(t1 * t1 - t0 * t2)


def heine_check(alpha: float, p: EllipseParams, N: int,
                n_radial: int = 24, n_angular: int = 48) -> float:
    """Deviation between the ensemble average of prod_i (z - z_i) over the
    N-point determinantal weight prod_{i<j}|z_i - z_j|^2 prod_i dA_alpha(z_i)
    and the monic polynomial ptilde_N, maximized over a grid in the ellipse.

    Only N in {1, 2} are computed directly (2N-dimensional tensor rule).
    """
    if N not in (1, 2):
        raise ValueError("direct ensemble average only implemented for N in {1, 2}")
    rule = build_rule(area_measure(p, alpha), n_radial=n_radial, n_angular=n_angular)
    z, w = rule.nodes, rule.weights

    gx = np.linspace(-0.8 * p.a, 0.8 * p.a, 5)
    gy = np.linspace(-0.8 * p.b, 0.8 * p.b, 5)
    grid = (gx[:, None] + 1j * gy[None, :]).ravel()

    if N == 1:
        m1 = np.sum(w * z)
        avg = grid - m1
    else:
        W = np.outer(w, w) * np.abs(z[:, None] - z[None, :]) ** 2
        T0 = W.sum()
        T1 = (W.sum(axis=1) * z).sum()
        T2 = z @ W @ z
        avg = grid * grid - 2.0 * grid * (T1 / T0) + T2 / T0

    Cm = gegenbauer_matrix(alpha, N, grid / p.c)[N]
    mono = Cm * monic_factor(alpha, p, N)
    return float(np.max(np.abs(avg - mono)))
