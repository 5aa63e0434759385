"""Acceptance battery: the twelve headline criteria at their stated tolerances.

Each test runs one criterion through the verification module and registers a
one-line PASS/FAIL summary that conftest prints after the whole run.

Criterion 7 is split in two: four of its five clauses hold and are asserted
green, but the below-band nonvanishing clause for column n = 4 is
structurally unattainable at the stated charge location v = 1.5 (the
degree-5 orthonormal polynomial vanishes there, forcing exact zeros), so
that clause lives in a strict xfail and criterion 7 reports FAIL with the
full explanation.  See README for the analysis.
"""

import subprocess
import sys

import pytest
from conftest import record_criterion

from ellipoly.verification import (
    check_chebyshev_families,
    check_contour_identity,
    check_gegenbauer_gram,
    check_heine_average,
    check_jacobi_derived_ellipse,
    check_legendre_diagonal,
    check_limit_regimes,
    check_moment_relations,
    check_multiplication_matrix,
    check_selberg_integral,
    check_turan_determinant,
)


def _run(number, check):
    result = check()
    record_criterion(number, result.passed, result.detail)
    assert result.passed, result.detail
    return result


def test_criterion_01_gegenbauer_orthogonality():
    _run(1, check_gegenbauer_gram)


def test_criterion_02_legendre_special_case():
    _run(2, check_legendre_diagonal)


def test_criterion_03_jacobi_subfamilies_derived_ellipse():
    _run(3, check_jacobi_derived_ellipse)


def test_criterion_04_chebyshev_four_kinds():
    _run(4, check_chebyshev_families)


def test_criterion_05_contour_identity():
    _run(5, check_contour_identity)


def test_criterion_06_moment_scaling_parity_coefficients():
    _run(6, check_moment_relations)


@pytest.fixture(scope="module")
def multiplication_result():
    return check_multiplication_matrix()


def test_criterion_07_hessenberg_attainable_clauses(multiplication_result):
    r = multiplication_result
    record_criterion(7, r.passed, r.detail)
    m = r.metrics
    assert m["plain_bandwidth"] == 2
    for n in range(5, 9):
        assert m["below_band_max"][str(n)] > 1e-6
    assert m["closed_vs_quadrature"] <= 1e-8
    decay = m["decay_b_sweep"]
    assert decay[0] > decay[1] > decay[2]
    # column 4 must be an exact zero here; if it ever becomes nonzero the
    # companion xfail below flips to XPASS and fails the suite
    assert m["below_band_max"]["4"] < 1e-12


@pytest.mark.xfail(
    strict=True,
    reason="at v = 1.5 on p(2,1) the degree-5 orthonormal polynomial vanishes "
    "(1.5/c = cos(pi/6) is a root of the degree-5 second-kind Chebyshev "
    "polynomial), so every below-band entry of column n = 4 is an exact zero "
    "and can never exceed 1e-6; at v = 1.6 the same clause passes",
)
def test_criterion_07_below_band_nonvanishing_column_4(multiplication_result):
    assert multiplication_result.metrics["below_band_max"]["4"] > 1e-6


def test_criterion_08_turan_criterion():
    _run(8, check_turan_determinant)


def test_criterion_09_selberg_partition_function():
    _run(9, check_selberg_integral)


def test_criterion_10_heine_ensemble_average():
    _run(10, check_heine_average)


def test_criterion_11_limit_regimes():
    _run(11, check_limit_regimes)


def test_criterion_12_verify_determinism():
    runs = [
        subprocess.run([sys.executable, "-m", "ellipoly.cli", "verify"],
                       capture_output=True)
        for _ in range(2)
    ]
    identical = bool(runs[0].stdout) and runs[0].stdout == runs[1].stdout
    # the battery carries the intended criterion-7 red, so verify exits 2
    codes_ok = all(r.returncode == 2 for r in runs)
    detail = (f"two `verify` runs byte-identical "
              f"({len(runs[0].stdout)} bytes each; exit code 2 both times, "
              f"from the intended criterion-7 red)")
    record_criterion(12, identical and codes_ok, detail)
    assert identical, "verify output differed between runs"
    assert codes_ok, [r.returncode for r in runs]
