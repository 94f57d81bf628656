"""Acceptance gate: one test per release criterion, at stated tolerances.

Run with -v to get the one-line pass/fail verdict per criterion.  Nothing
here relaxes a bound to make a run green; a red line means the package
does not meet its contract.
"""

import math
import subprocess
import sys

import numpy as np
import pytest

from qdeform.algebra import (AlgebraParams, algebra_residuals,
                             build_circle_rep, build_fourier_rep,
                             circle_bump_state, circle_harmonic_state,
                             commutator_convergence)
from qdeform.counting import fill_table, phase_cell
from qdeform.momentum import bessel_j0, char_fn_quadrature, density_moment, \
    dos_product
from qdeform.reports import assemble_uncertainty
from qdeform.uncertainty import (GaussianSpec, angle_bound,
                                 gaussian_bound_report, gaussian_moments,
                                 gup_curve, kempf_operator_check,
                                 kempf_residual_convergence,
                                 localized_state_check)
from qdeform.wells import (WellSpec, continuum_shift_residual,
                           lattice_well_solve, single_level, well_from_k)


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "qdeform", *args],
                          capture_output=True, text=True)


def test_criterion_1_algebra_relations():
    for params in (AlgebraParams(ell=1.0, epsilon=-1),
                   AlgebraParams(ell=0.7, epsilon=-1, r=1.3)):
        for n_max in (8, 16, 32, 64):
            report = algebra_residuals(build_fourier_rep(params, n_max))
            for key, value in report.entry_interior.items():
                assert value <= 1e-13, (params, n_max, key, value)
    _, _, ratio = commutator_convergence(
        AlgebraParams(ell=0.4, epsilon=1), 6.0, 193)
    assert ratio >= 12.0
    print("PASS [1/8] bracket relations exact on the lattice, "
          "4th-order on the hyperbola (ratio %.2f)" % ratio)


def test_criterion_2_well_spectra():
    params = AlgebraParams(ell=1.0, epsilon=-1)
    worst = max(lattice_well_solve(well_from_k(params, k)).max_abs_diff
                for k in range(3, 65))
    assert worst <= 1e-12

    shift_worst = 0.0
    for (ell, delta), n in (((0.1, math.pi), 1), ((0.1, math.pi), 2),
                            ((0.01, 1.0), 3)):
        spec = WellSpec(AlgebraParams(ell=ell, epsilon=1), delta)
        shift_worst = max(shift_worst, continuum_shift_residual(spec, n))
    assert shift_worst <= 1e-12

    checked = 0
    for epsilon in (1, -1):
        for ell in (0.1, 0.01):
            if epsilon == -1:
                spec = well_from_k(AlgebraParams(ell=ell, epsilon=-1),
                                   int(round(math.pi / ell)))
            else:
                spec = WellSpec(AlgebraParams(ell=ell, epsilon=1), math.pi)
            flat = WellSpec(AlgebraParams(ell=0.0, epsilon=epsilon),
                            spec.delta)
            for n in (1, 2):
                ratio = n * math.pi * ell / spec.delta
                if ratio > 0.1:
                    continue  # quadratic budget is only promised below 0.1
                gap = abs(single_level(spec, n) / single_level(flat, n) - 1)
                assert gap <= ratio ** 2
                checked += 1
    assert checked >= 5
    print("PASS [2/8] spectra: multiset %.2e, operator identity %.2e, "
          "flat limit inside budget" % (worst, shift_worst))


def test_criterion_3_cell_counting():
    flat = AlgebraParams(ell=0.0, epsilon=-1)
    for n in range(6):
        assert phase_cell(flat, 2.7, n) == math.pi

    rising = [row.cell for row in
              fill_table(AlgebraParams(ell=1.0, epsilon=1), 8.0, 6).rows]
    assert all(b > a for a, b in zip(rising, rising[1:]))

    minus_rows = fill_table(AlgebraParams(ell=1.0, epsilon=-1), 10.0, 9).rows
    falling = [row.cell for row in minus_rows if not row.band_edge]
    assert all(b < a for a, b in zip(falling, falling[1:]))

    delta = 1.0
    for ell in (0.05, 0.02, 0.01):
        for epsilon in (1, -1):
            cell = phase_cell(AlgebraParams(ell=ell, epsilon=epsilon),
                              delta, 0)
            assert abs(cell / math.pi - 1) <= (math.pi * ell / delta) ** 2
    print("PASS [3/8] counting: flat cell is pi exactly, deformed cells "
          "monotone and inside the quadratic budget")


def test_criterion_4_momentum_statistics():
    worst = max(abs(bessel_j0(z) - char_fn_quadrature(z, 1.0))
                for z in np.linspace(0.0, 30.0, 151))
    worst = max(worst, max(abs(bessel_j0(2.0 * s) - char_fn_quadrature(s, 2.0))
                           for s in np.linspace(0.0, 15.0, 76)))
    assert worst <= 1e-9

    assert abs(density_moment(0, 1.0) - 1.0) <= 1e-10
    assert abs(density_moment(0, 1.3) - 1.0) <= 1e-10
    assert abs(density_moment(2, 1.0) - 0.5) <= 1e-9
    assert abs(density_moment(2, 1.3) - 0.5 * 1.3 ** 2) <= 1e-9

    for ell in (0.2, 0.1, 0.05):
        rep = dos_product(AlgebraParams(ell=ell, epsilon=-1))
        assert abs(rep.product - math.pi) <= ell ** 2 / 8.0 * math.pi * 1.1
    print("PASS [4/8] momentum law: characteristic-function routes agree "
          "(%.2e), moments and spacing-product limits hold" % worst)


def test_criterion_5_gaussian_uncertainty():
    for ell in (1.0, 0.5):
        params = AlgebraParams(ell=ell, epsilon=1)
        for alpha in (0.04, 1.0, 4.0):
            mom = gaussian_moments(GaussianSpec(alpha, params))
            assert abs(mom.dx - ell / (2 * math.sqrt(alpha))) <= 1e-8

    params = AlgebraParams(ell=1.0, epsilon=1)
    for alpha in np.geomspace(0.01, 6.0, 13):
        report = gaussian_bound_report(GaussianSpec(float(alpha), params))
        assert report.product - report.bound >= 0.0
        assert report.satisfied

    assert abs(gaussian_moments(GaussianSpec(1e-3, params)).product
               - 0.5) <= 0.01

    # the printed closed forms ride along as emitted, unasserted columns
    _, columns, rows = assemble_uncertainty(1.0, 1.0, 1, 1.0)
    for column in ("p2_closed", "p2_closed_dev", "product_closed",
                   "product_closed_dev"):
        assert column in columns
        assert column in rows[0]
    print("PASS [5/8] gaussian family: dx closed form, bound margin >= 0 "
          "on [0.01, 6], flat limit 1/2, deviation columns emitted")


def test_criterion_6_gup_comparator():
    for a in (0.0, 1.0):
        report = kempf_operator_check(2.0, a, (40.0, 4000))
        assert report.eigen_residual <= 1e-6

    comm_ratio, eigen_ratio = kempf_residual_convergence(2.0, 1.0)
    assert 12.0 <= comm_ratio <= 20.0
    assert 12.0 <= eigen_ratio <= 20.0

    curve = gup_curve(2.0, np.linspace(0.21, 2.93, 40001))
    assert abs(curve.sampled_argmin_dp - math.sqrt(2.0 / 2.0)) <= 1e-4

    tails = kempf_operator_check(2.0, 0.0).energy_tail
    fractions = [value / (2.0 * cut) for cut, value in tails]
    assert all(b > a for a, b in zip(fractions, fractions[1:]))
    assert fractions[-1] > 0.998
    print("PASS [6/8] comparator realization: eigenstates, 4th-order "
          "bracket (%.1f), minimum within 1e-4, linear energy divergence"
          % comm_ratio)


def test_criterion_7_localized_and_angle():
    rep = build_fourier_rep(AlgebraParams(ell=1.0, epsilon=-1), 12)
    report = localized_state_check(3, rep)
    assert (report.dx, report.product, report.bound) == (0.0, 0.0, 0.0)

    crep = build_circle_rep(AlgebraParams(ell=1.0, epsilon=-1), 32)
    for n in (0, 1, 2, 3):
        assert angle_bound(circle_harmonic_state(crep, n)).bound == 0.0

    bump = build_circle_rep(AlgebraParams(ell=1.0, epsilon=-1), 64)
    assert angle_bound(circle_bump_state(bump)).bound == 0.5
    print("PASS [7/8] sharp states: zero triple, zero seam bound, "
          "wavepacket bound exactly 1/2")


def test_criterion_8_verify_and_determinism():
    first = run_cli("verify")
    assert first.returncode == 0
    lines = first.stdout.strip().splitlines()
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1].endswith("0 FAIL")

    second = run_cli("verify")
    assert second.stdout == first.stdout

    config = ("spectra", "--epsilon", "-1", "--ell", "1", "--k", "12")
    assert run_cli(*config).stdout == run_cli(*config).stdout
    json_config = ("momstats", "--steps", "5", "--format", "json")
    assert run_cli(*json_config).stdout == run_cli(*json_config).stdout
    print("PASS [8/8] verify exits 0 with every suite green; reports are "
          "byte-identical across runs")
