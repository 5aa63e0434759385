"""Quadrature rules: masses, exactness, parity, and the contour identity."""

import math

import numpy as np
import pytest

from ellipoly import (
    area_measure,
    b_minus_measure,
    b_plus_measure,
    build_rule,
    chebyshev_t_measure,
    chebyshev_v_measure,
    chebyshev_w_measure,
    contour_check,
    derived_params,
    flat_measure,
    inner_product,
    lp_norm,
    make_params,
    moment,
)


@pytest.mark.parametrize("alpha", [-0.9, 0.0, 1.0, 4.0])
def test_area_rule_mass_is_one(p21, alpha):
    rule = build_rule(area_measure(p21, alpha))
    assert rule.mass == pytest.approx(1.0, rel=1e-13)


def test_flat_masses(p21):
    # unweighted ellipse area, and the log-divergent first-kind mass
    assert build_rule(flat_measure(p21)).mass == pytest.approx(
        math.pi * p21.a * p21.b, rel=1e-12)
    q = p21.r / p21.c
    assert build_rule(chebyshev_t_measure(p21)).mass == pytest.approx(
        2 * math.pi * math.log(q), rel=1e-10)
    # third/fourth-kind masses: pi*c/(1+2n)(q - 1/q) at n=0 equals 2 pi b
    for mk in (chebyshev_v_measure, chebyshev_w_measure):
        assert build_rule(mk(p21)).mass == pytest.approx(
            2 * math.pi * p21.b, rel=1e-10)


def test_derived_rules_mass_one(p21):
    d = derived_params(p21)
    for mk in (b_minus_measure, b_plus_measure):
        for alpha in (0.0, 1.5):
            assert build_rule(mk(d, alpha)).mass == pytest.approx(1.0, rel=1e-12)


def test_low_moment_anchors(p21):
    rule = build_rule(area_measure(p21, 0.0))
    assert moment(0, 0, rule) == pytest.approx(1.0)
    assert moment(1, 1, rule) == pytest.approx(5.0 / 4.0, rel=1e-13)
    assert moment(2, 0, rule) == pytest.approx(3.0 / 4.0, rel=1e-13)
    assert moment(0, 2, rule) == pytest.approx(3.0 / 4.0, rel=1e-13)


def test_odd_moments_vanish_exactly(p21):
    """Nodes come in exact antipodal pairs, so odd moments sum to exact zero."""
    rule = build_rule(area_measure(p21, 1.3))
    for (pq) in ((1, 0), (2, 1), (5, 0), (7, 4), (9, 8)):
        assert moment(*pq, rule) == 0.0


def test_node_antipodal_structure(p21):
    rule = build_rule(area_measure(p21, 0.0))
    assert rule.nodes.size % 2 == 0
    np.testing.assert_array_equal(rule.nodes[0::2], -rule.nodes[1::2])
    np.testing.assert_array_equal(rule.weights[0::2], rule.weights[1::2])


def test_gauss_exactness_under_refinement(p21):
    # a coarse rule already integrates low-degree moments exactly
    coarse = build_rule(area_measure(p21, 0.7), n_radial=12, n_angular=32)
    fine = build_rule(area_measure(p21, 0.7))
    for pq in ((0, 0), (1, 1), (2, 2), (4, 2), (3, 3)):
        assert moment(*pq, coarse) == pytest.approx(moment(*pq, fine),
                                                    rel=1e-13)


def test_odd_angular_count_rejected(p21):
    with pytest.raises(ValueError):
        build_rule(area_measure(p21, 0.0), n_angular=383)


def test_inner_product_conjugate_symmetry(p21):
    rule = build_rule(area_measure(p21, 0.5))
    f = lambda z: z**2 + 0.3j * z
    g = lambda z: 1.0 + z
    assert inner_product(f, g, rule) == pytest.approx(
        np.conj(inner_product(g, f, rule)))


def test_lp_norm_values(p21):
    rule = build_rule(area_measure(p21, 0.0))
    assert lp_norm(lambda z: np.ones_like(z), 2.0, rule) == pytest.approx(1.0)
    # ||z||_2 = sqrt(<z,z>) = sqrt(5)/2
    assert lp_norm(lambda z: z, 2.0, rule) == pytest.approx(
        math.sqrt(5.0) / 2.0, rel=1e-13)
    # p = 1 is just the integral of |z|
    direct = np.sum(rule.weights * np.abs(rule.nodes))
    assert lp_norm(lambda z: z, 1.0, rule) == pytest.approx(direct)


def test_contour_identity_anchors(p21):
    q2 = (p21.r / p21.c) ** 2
    v0 = contour_check(p21, 0, 0)
    assert v0 == pytest.approx(1j * math.pi / 2 * (q2 - 1 / q2), rel=1e-12)
    v2 = contour_check(p21, 2, 2)
    assert v2 == pytest.approx(1j * math.pi * 3 / 2 * (q2**3 - q2**-3),
                               rel=1e-12)
    # off-diagonal pairs integrate to zero
    assert abs(contour_check(p21, 1, 4)) < 1e-10
    assert abs(contour_check(p21, 3, 0)) < 1e-10


def test_contour_identity_other_geometry():
    p = make_params(1.5, 0.4)
    q2 = (p.r / p.c) ** 2
    for n in (0, 3):
        val = contour_check(p, n, n)
        closed = 1j * math.pi * (n + 1) / 2 * (q2 ** (n + 1) - q2 ** -(n + 1))
        assert val == pytest.approx(closed, rel=1e-11)
