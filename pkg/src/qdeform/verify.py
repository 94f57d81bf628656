"""Invariant suite behind the `verify` subcommand.

Each check re-runs one family of guarantees from scratch and reports a
PASS/FAIL line; any FAIL turns the process exit code to 2.  Tolerances
here restate the library's own contracts, so this file doubles as the
executable summary of what the package promises numerically.
"""

import math

import numpy as np

from .algebra import (AlgebraParams, algebra_residuals, build_circle_rep,
                      build_fourier_rep, circle_bump_state,
                      circle_harmonic_state, commutator_convergence)
from .counting import fill_table, phase_cell
from .momentum import bessel_j0, char_fn_quadrature, density_moment, \
    dos_product
from .uncertainty import (GaussianSpec, angle_bound, gaussian_bound_report,
                          gaussian_moments, gup_curve, kempf_operator_check,
                          kempf_residual_convergence, localized_state_check)
from .wells import WellSpec, continuum_shift_residual, lattice_well_solve, \
    single_level, well_from_k


def _algebra_fourier_exactness():
    params = AlgebraParams(ell=0.7, epsilon=-1, r=1.3)
    worst = 0.0
    for n_max in (8, 16, 32, 64):
        rep = build_fourier_rep(params, n_max)
        report = algebra_residuals(rep)
        worst = max(worst, max(report.entry_interior.values()))
    return worst <= 1e-13, "max interior residual %.3e" % worst


def _algebra_hyperbola_convergence():
    params = AlgebraParams(ell=0.4, epsilon=1)
    coarse, fine, ratio = commutator_convergence(params, 6.0, 193)
    ok = ratio >= 12.0
    return ok, "residual %.3e -> %.3e, ratio %.2f" % (coarse, fine, ratio)


def _wells_lattice_multiset():
    params = AlgebraParams(ell=1.0, epsilon=-1)
    worst = 0.0
    for k in range(3, 65):
        report = lattice_well_solve(well_from_k(params, k))
        worst = max(worst, report.max_abs_diff)
    return worst <= 1e-12, "max multiset deviation %.3e over k=3..64" % worst


def _wells_shift_identity():
    worst = 0.0
    cases = (((0.1, math.pi), 1), ((0.1, math.pi), 2), ((0.01, 1.0), 3))
    for (ell, delta), n in cases:
        spec = WellSpec(AlgebraParams(ell=ell, epsilon=1), delta)
        worst = max(worst, continuum_shift_residual(spec, n))
    return worst <= 1e-12, "max operator-identity residual %.3e" % worst


def _wells_small_ell_limit():
    worst = 0.0
    for epsilon in (1, -1):
        for ell in (0.1, 0.01):
            if epsilon == -1:
                # the discrete well exists only at commensurate widths
                spec = well_from_k(AlgebraParams(ell=ell, epsilon=-1),
                                   int(round(math.pi / ell)))
            else:
                spec = WellSpec(AlgebraParams(ell=ell, epsilon=1), math.pi)
            flat = WellSpec(AlgebraParams(ell=0.0, epsilon=epsilon),
                            spec.delta)
            for n in (1, 2):
                gap = abs(single_level(spec, n) / single_level(flat, n) - 1)
                budget = (n * math.pi * ell / spec.delta) ** 2
                worst = max(worst, gap / budget)
    return worst <= 1.0, "worst gap/budget %.3f" % worst


def _counting_flat_cell_pi():
    params = AlgebraParams(ell=0.0, epsilon=-1)
    exact = all(phase_cell(params, 3.14159, n) == math.pi for n in range(5))
    return exact, "flat cells equal pi bit-for-bit" if exact \
        else "flat cell drifted from pi"


def _counting_monotonicity():
    plus = fill_table(AlgebraParams(ell=1.0, epsilon=1), 8.0, 6)
    cells_up = [row.cell for row in plus.rows]
    ok_up = all(b > a for a, b in zip(cells_up, cells_up[1:]))
    minus = fill_table(AlgebraParams(ell=1.0, epsilon=-1), 10.0, 9)
    body = [row.cell for row in minus.rows if not row.band_edge]
    ok_down = all(b < a for a, b in zip(body, body[1:]))
    return ok_up and ok_down, "eps=+1 rising %s, eps=-1 falling %s" % (
        ok_up, ok_down)


def _counting_small_ell_limit():
    worst = 0.0
    delta = 1.0
    for ell in (0.05, 0.02, 0.01):
        budget = (math.pi * ell / delta) ** 2
        for epsilon in (1, -1):
            params = AlgebraParams(ell=ell, epsilon=epsilon)
            gap = abs(phase_cell(params, delta, 0) / math.pi - 1)
            worst = max(worst, gap / budget)
    return worst <= 1.0, "worst gap/budget %.3f" % worst


def _momstats_charfn_agreement():
    worst = 0.0
    for z in np.linspace(0.0, 30.0, 151):
        worst = max(worst, abs(bessel_j0(z) - char_fn_quadrature(z, 1.0)))
    return worst <= 1e-9, "max series/quadrature gap %.3e" % worst


def _momstats_density_norm():
    gap = abs(density_moment(0, 1.0) - 1.0)
    return gap <= 1e-10, "norm deviation %.3e" % gap


def _momstats_second_moment():
    gap = abs(density_moment(2, 1.3) - 0.5 * 1.3 ** 2)
    return gap <= 1e-9, "second-moment deviation %.3e" % gap


def _momstats_dos_limit():
    worst = 0.0
    for ell in (0.2, 0.1, 0.05):
        rep = dos_product(AlgebraParams(ell=ell, epsilon=-1))
        budget = ell ** 2 / 8.0 * math.pi * 1.1
        worst = max(worst, abs(rep.product - math.pi) / budget)
    return worst <= 1.0, "worst gap/budget %.3f" % worst


def _uncertainty_gaussian_dx():
    worst = 0.0
    params = AlgebraParams(ell=1.0, epsilon=1)
    for alpha in (0.04, 1.0, 4.0):
        mom = gaussian_moments(GaussianSpec(alpha, params))
        worst = max(worst, abs(mom.dx - 0.5 / math.sqrt(alpha)))
    return worst <= 1e-8, "max dx deviation %.3e" % worst


def _uncertainty_bound_margin():
    params = AlgebraParams(ell=1.0, epsilon=1)
    worst = math.inf
    for alpha in np.geomspace(0.01, 6.0, 13):
        report = gaussian_bound_report(GaussianSpec(float(alpha), params))
        worst = min(worst, report.product - report.bound)
    return worst >= 0.0, "min margin %.3e over alpha in [0.01, 6]" % worst


def _uncertainty_heisenberg_limit():
    params = AlgebraParams(ell=1.0, epsilon=1)
    product = gaussian_moments(GaussianSpec(1e-3, params)).product
    return abs(product - 0.5) <= 0.01, "product %.6f at alpha=1e-3" % product


def _gup_kempf_eigenstate():
    worst = 0.0
    for a in (0.0, 1.0):
        worst = max(worst,
                    kempf_operator_check(2.0, a, (40.0, 4000)).eigen_residual)
    return worst <= 1e-6, "max eigenstate residual %.3e" % worst


def _gup_kempf_commutator_order():
    comm_ratio, eigen_ratio = kempf_residual_convergence(2.0, 1.0)
    ok = 12.0 <= comm_ratio <= 20.0 and 12.0 <= eigen_ratio <= 20.0
    return ok, "halving ratios %.2f (bracket), %.2f (eigen)" % (
        comm_ratio, eigen_ratio)


def _gup_minimum_convergence():
    curve = gup_curve(2.0, np.linspace(0.21, 2.93, 40001))
    gap = abs(curve.sampled_argmin_dp - curve.argmin_dp)
    return gap <= 1e-4, "sampled argmin off by %.3e" % gap


def _gup_energy_divergence():
    report = kempf_operator_check(2.0, 0.0)
    fractions = [value / (2.0 * cut) for cut, value in report.energy_tail]
    rising = all(b > a for a, b in zip(fractions, fractions[1:]))
    ok = rising and fractions[-1] > 0.998
    return ok, "tail/(2L) ratios " + ", ".join("%.4f" % f for f in fractions)


def _localized_delta_triple():
    reps = (build_fourier_rep(AlgebraParams(ell=1.0, epsilon=-1), 12),
            build_fourier_rep(AlgebraParams(ell=0.7, epsilon=-1, r=1.3), 10))
    for rep, site in zip(reps, (3, -5)):
        report = localized_state_check(site, rep)
        if (report.dx, report.product, report.bound) != (0.0, 0.0, 0.0):
            return False, "triple not exactly zero at site %d" % site
    return True, "spread, product, bound all exactly 0.0"


def _angle_harmonic_bound_zero():
    rep = build_circle_rep(AlgebraParams(ell=1.0, epsilon=-1), 32)
    for n in (0, 1, 2, 3):
        report = angle_bound(circle_harmonic_state(rep, n))
        if report.bound != 0.0:
            return False, "bound %r at n=%d" % (report.bound, n)
    return True, "seam bound exactly 0.0 for n=0..3"


def _angle_seam_wavepacket_bound():
    rep = build_circle_rep(AlgebraParams(ell=1.0, epsilon=-1), 64)
    report = angle_bound(circle_bump_state(rep))
    ok = report.bound == 0.5 and report.satisfied
    return ok, "bound %.17g, satisfied %s" % (report.bound, report.satisfied)


CHECKS = (
    ("algebra_fourier_exactness", _algebra_fourier_exactness),
    ("algebra_hyperbola_convergence", _algebra_hyperbola_convergence),
    ("wells_lattice_multiset", _wells_lattice_multiset),
    ("wells_shift_identity", _wells_shift_identity),
    ("wells_small_ell_limit", _wells_small_ell_limit),
    ("counting_flat_cell_pi", _counting_flat_cell_pi),
    ("counting_monotonicity", _counting_monotonicity),
    ("counting_small_ell_limit", _counting_small_ell_limit),
    ("momstats_charfn_agreement", _momstats_charfn_agreement),
    ("momstats_density_norm", _momstats_density_norm),
    ("momstats_second_moment", _momstats_second_moment),
    ("momstats_dos_limit", _momstats_dos_limit),
    ("uncertainty_gaussian_dx", _uncertainty_gaussian_dx),
    ("uncertainty_bound_margin", _uncertainty_bound_margin),
    ("uncertainty_heisenberg_limit", _uncertainty_heisenberg_limit),
    ("gup_kempf_eigenstate", _gup_kempf_eigenstate),
    ("gup_kempf_commutator_order", _gup_kempf_commutator_order),
    ("gup_minimum_convergence", _gup_minimum_convergence),
    ("gup_energy_divergence", _gup_energy_divergence),
    ("localized_delta_triple", _localized_delta_triple),
    ("angle_harmonic_bound_zero", _angle_harmonic_bound_zero),
    ("angle_seam_wavepacket_bound", _angle_seam_wavepacket_bound),
)


def run_verify():
    """All checks in order; returns (report lines, all passed)."""
    lines = []
    failures = 0
    for name, check in CHECKS:
        try:
            ok, detail = check()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, "raised %s: %s" % (type(exc).__name__, exc)
        if not ok:
            failures += 1
        lines.append("%s %s (%s)" % ("PASS" if ok else "FAIL", name, detail))
    lines.append("%d checks: %d PASS, %d FAIL"
                 % (len(CHECKS), len(CHECKS) - failures, failures))
    return lines, failures == 0
