#!/usr/bin/env python3
"""Tour of every closed-form orthogonal family on the weighted ellipse.

For each family the script assembles the quadrature Gram matrix on the
canonical measure and compares the diagonal against the closed-form squared
norms, printing the worst deviations.  Everything is exact identities, so
the numbers should sit at rounding level.
"""

import numpy as np

from ellipoly import (
    canonical_measure,
    chebyshev_t,
    chebyshev_u,
    chebyshev_v,
    chebyshev_w,
    closed_norm,
    derived_params,
    gegenbauer,
    gram_matrix,
    jacobi_half,
    legendre,
    make_params,
)

LINE = "-" * 72


def report(label, family, params, nmax=10):
    g = gram_matrix(family, canonical_measure(family, params), nmax)
    rel = np.max(g.diag_relative_errors)
    off = g.max_offdiag / np.max(g.diag)
    print(f"{label:34s} offdiag {off:9.2e}   diag rel {rel:9.2e}")
    return g


def main():
    p = make_params(2.0, 1.0)
    d = derived_params(p)
    print(f"base ellipse    a=2, b=1   (c={p.c:.6f}, x*={p.x_star:.6f})")
    print(f"derived ellipse a={d.a:.6f}, b={d.b:.6f} (same foci)")
    print(LINE)

    print("Gegenbauer C_n^(1+alpha)(z/c) under (1+alpha)(1-h)^alpha dA:")
    for alpha in (-0.9, -0.5, 0.0, 1.0, 2.5):
        report(f"  alpha = {alpha:+.2f}", gegenbauer(alpha), p)
    print(LINE)

    print("special cases and relatives:")
    report("  Legendre (alpha = -1/2)", legendre(), p)
    for sign, name in ((-1, "P^(a+1/2,-1/2) even sector"),
                       (+1, "P^(a+1/2,+1/2) odd sector")):
        report(f"  {name}", jacobi_half(1.5, sign), d)
    print(LINE)

    print("Chebyshev I-IV under their flat singular weights:")
    for fam, name in ((chebyshev_t(), "T, 1/|c^2-z^2|"),
                      (chebyshev_u(), "U, plain area"),
                      (chebyshev_v(), "V, 1/|c-z|"),
                      (chebyshev_w(), "W, 1/|c+z|")):
        report(f"  {name}", fam, p)
    print(LINE)

    t0 = closed_norm(chebyshev_t(), p, 0)
    u0 = closed_norm(chebyshev_u(), p, 0)
    print(f"anchors: T_0 norm = {t0:.12f} (pi ln 3 = {np.pi * np.log(3):.12f})")
    print(f"         U_0 norm = {u0:.12f} (pi a b  = {np.pi * 2:.12f})")


if __name__ == "__main__":
    main()
