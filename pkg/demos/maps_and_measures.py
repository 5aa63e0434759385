#!/usr/bin/env python3
"""Geometry of the ellipse: Joukowsky parametrization, quadratic map, weights.

Walks through the coordinate plumbing the library rests on:

  * the confocal parametrization and the Joukowsky boundary image,
  * the quadratic map w = c(2(z/c)^2 - 1) sending the base ellipse onto the
    derived (same-foci, doubled) ellipse, with its half-plane inverse,
  * the pullback identity j(w) = h(z) connecting the derived ellipse
    indicator to the base one,
  * the weight densities of the area and flat measures.
"""

import numpy as np

from ellipoly import (
    area_measure,
    chebyshev_t_measure,
    derived_params,
    ellipse_h,
    elliptic_to_cartesian,
    flat_measure,
    focal_j,
    inverse_quadratic_map,
    joukowsky,
    make_params,
    quadratic_map,
    weight_density,
)

LINE = "-" * 72


def main():
    p = make_params(2.0, 1.0)
    d = derived_params(p)
    rng = np.random.default_rng(7)

    print(f"base ellipse:    a={p.a}, b={p.b}, c={p.c:.6f}, R={p.R:.6f}")
    print(f"derived ellipse: a={d.a:.6f}, b={d.b:.6f}, c={d.c:.6f}")
    print(LINE)

    # The boundary is the Joukowsky image of the circle |w| = a + b = cR.
    theta = np.linspace(0.0, 2 * np.pi, 9, endpoint=False)
    z = joukowsky(p, p.c * p.R * np.exp(1j * theta))
    print("boundary samples via Joukowsky (h should be exactly 1):")
    print("  max |h - 1| =", f"{np.max(np.abs(ellipse_h(p, z) - 1.0)):.3e}")

    # elliptic coordinates (r, phi): r in [0, 1) sweeps confocal shells.
    r = np.array([0.25, 0.5, 0.75, 0.999])
    shell = elliptic_to_cartesian(p, r, 0.3)
    print("confocal shells at phi=0.3 stay interior:",
          bool(np.all(ellipse_h(p, shell) < 1.0)))
    print(LINE)

    # Quadratic map: right half of the base ellipse <-> derived ellipse.
    x = rng.uniform(0.1, 1.6, 200)
    y = rng.uniform(-0.6, 0.6, 200)
    z = x + 1j * y
    z = z[ellipse_h(p, z) < 1.0]
    w, d2 = quadratic_map(p, z)
    back = inverse_quadratic_map(p, w)
    print(f"quadratic map round trip on {z.size} interior points:")
    print("  max |z - inverse(map(z))| =", f"{np.max(np.abs(back - z)):.3e}")
    print("  image lands inside derived ellipse:",
          bool(np.all(focal_j(d2, w) < 1.0 + 1e-12)))
    print("  pullback residual max |j(w) - h(z)| =",
          f"{np.max(np.abs(focal_j(d, w) - ellipse_h(p, z))):.3e}")

    # The inverse has a branch cut on the real ray left of -c.
    try:
        inverse_quadratic_map(p, complex(-p.c - 0.5, 0.0))
    except ValueError as exc:
        print("  cut rejection:", exc)
    print(LINE)

    # Weight densities relative to the mass-one area element dA.
    pts = z[:5]
    area = np.array([weight_density(area_measure(p, 0.5), zz) for zz in pts])
    expect = 1.5 * (1.0 - ellipse_h(p, pts)) ** 0.5
    print("area density (alpha=0.5) vs (1+a)(1-h)^a:",
          f"{np.max(np.abs(area - expect)):.3e}")
    t_den = weight_density(chebyshev_t_measure(p), pts[0])
    print("Chebyshev-T density pi*a*b/|c^2-z^2| at first point:",
          f"{t_den:.6f}")
    u_den = np.array([weight_density(flat_measure(p), zz) for zz in pts])
    print("flat (Chebyshev-U) density is constant pi*a*b:",
          bool(np.allclose(u_den, np.pi * p.a * p.b)))


if __name__ == "__main__":
    main()
