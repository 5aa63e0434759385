#!/usr/bin/env python3
"""Partition function of the elliptic determinantal ensemble, three ways.

Z_N is the normalization of the N-point density
prod_{i<j} |z_i - z_j|^2 prod_i dA_alpha(z_i).  The library offers

  selberg_product  log Z_N = log N! + sum of log monic squared norms,
  selberg_closed   the same quantity via a gamma-function ladder,
  selberg_direct   brute-force tensor quadrature, N <= 2 only.

The routes must agree to near machine precision; the brute-force value
pins down the absolute constant (Z_2 = 5/2 on a=2, b=1 at alpha=0).
"""

import math

from ellipoly import make_params, selberg_compare

LINE = "-" * 72


def main():
    p = make_params(2.0, 1.0)

    print("N=2 at alpha=0 on a=2, b=1:")
    r = selberg_compare(0.0, p, 2, direct=True)
    print(f"  log Z_2 (product) = {r.log_product:.15f}")
    print(f"  log Z_2 (closed)  = {r.log_closed:.15f}")
    print(f"  Z_2 (direct)      = {r.direct_value:.15f}  (exact 5/2)")
    print(f"  direct rel error  = {r.direct_rel_discrepancy:.3e}")
    print(LINE)

    print("route agreement across alpha and N:")
    print(f"  {'alpha':>6s} {'N':>3s} {'log Z_N':>22s} {'|closed-product| rel':>22s}")
    for alpha in (-0.5, 0.0, 1.5, 4.0):
        for N in (3, 8, 15):
            r = selberg_compare(alpha, p, N)
            print(f"  {alpha:6.2f} {N:3d} {r.log_closed:22.12f}"
                  f" {r.log_rel_discrepancy:22.3e}")
    print(LINE)

    print("growth: log Z_N = log N! + sum of log monic norms; on this ellipse")
    print("the norm product dominates (monic norms grow like ((a+b)/2)^(2n)):")
    for N in (5, 10, 20, 40):
        r = selberg_compare(0.0, p, N)
        print(f"  N={N:3d}: log Z_N = {r.log_closed:14.6f},"
              f"  log N! = {math.lgamma(N + 1):14.6f}")
    print(LINE)

    print("geometry dependence at N=6, alpha=1:")
    for a, b in ((2.0, 1.0), (1.5, 0.4), (3.0, 2.5)):
        r = selberg_compare(1.0, make_params(a, b), 6)
        print(f"  a={a}, b={b}: log Z_6 = {r.log_closed:.10f}"
              f"  (routes differ by {r.log_rel_discrepancy:.1e})")


if __name__ == "__main__":
    main()
