"""Report assembly and deterministic emission.

Every subcommand reduces to (meta, columns, rows); this module renders that
triple as CSV with a '#' header block or as a {meta, rows} JSON document.
Numbers are written with 17 significant digits so the reports round-trip
doubles exactly, and nothing time- or host-dependent enters the stream:
equal configurations must produce byte-identical output.
"""

import json

import numpy as np

from . import __version__
from .algebra import AlgebraParams
from .counting import fill_table, phase_cell
from .momentum import char_fn_quadrature, bessel_j0, density_moment, \
    dos_product
from .uncertainty import (BOUND_DEFORMED, GaussianSpec, gaussian_moments,
                          gaussian_product_closed, gup_curve, measure_compare)
from .wells import (CASE_EPS_MINUS, CASE_EPS_PLUS, ODD_IMAGE, WellSpec,
                    lattice_well_solve, shift_rayleigh_quotient,
                    single_level, well_from_k)

CSV_FORMAT = "csv"
JSON_FORMAT = "json"

CONVENTIONS = ("hbar = c = 1; r = 1 unless set; well spans [0, delta]; "
               "lattice boundary odd_image unless set")

SPECTRA_COLUMNS = ("case", "epsilon", "ell", "mass", "delta", "n",
                   "E_analytic", "E_numeric", "abs_diff")
COUNTING_COLUMNS = ("case", "epsilon", "ell", "delta", "n", "p", "dp",
                    "cell", "cell_table", "abs_gap", "cumulative",
                    "band_edge")
MOMSTATS_COLUMNS = ("s", "char_series", "char_quadrature", "abs_gap")
UNCERTAINTY_COLUMNS = ("alpha", "ell", "dx", "dp", "product", "bound",
                       "bound_kind", "satisfied", "x2_quad", "p2_quad",
                       "x2_closed", "p2_closed", "p2_closed_dev",
                       "product_closed", "product_closed_dev")
GUP_COLUMNS = ("dp", "bound")
DOS_COLUMNS = ("ell", "r", "mu_x_inv", "mu_p_inv", "product",
               "small_ell_product")
MEASURES_COLUMNS = ("ell", "beta", "tau", "z_flat", "z_deformed", "z_gup")


def format_value(value):
    """One cell of CSV output; bool checked first (it is an int subtype)."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.17g" % float(value)
    return str(value)


def _plain(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def render_report(meta, columns, rows, output_format):
    """Rows to one deterministic text blob in the requested format."""
    if not rows:
        raise ValueError("refusing to emit a report with no rows")
    if output_format == CSV_FORMAT:
        lines = ["# qdeform %s" % __version__]
        for key, value in meta.items():
            lines.append("# %s: %s" % (key, format_value(value)))
        lines.append("# conventions: %s" % CONVENTIONS)
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(format_value(row[c]) for c in columns))
        return "\n".join(lines) + "\n"
    if output_format == JSON_FORMAT:
        doc = {
            "meta": dict({"tool": "qdeform", "version": __version__,
                          "conventions": CONVENTIONS},
                         **{k: _plain(v) for k, v in meta.items()}),
            "rows": [{c: _plain(row[c]) for c in columns} for row in rows],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    raise ValueError("unknown output format %r" % (output_format,))


def emit_report(meta, columns, rows, output_format, path=None):
    """Write the rendered report to path, or return it for stdout."""
    text = render_report(meta, columns, rows, output_format)
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        return None
    return text


# ----------------------------------------------------------- assembly

def _resolve_well(params, delta, k):
    if (delta is None) == (k is None):
        raise ValueError("give exactly one of delta and k")
    if k is not None:
        if params.ell <= 0.0:
            raise ValueError("the site count k needs a positive ell")
        return well_from_k(params, k)
    if params.ell > 0.0 and params.epsilon == -1:
        sites = int(round(delta / params.ell))
        return WellSpec(params, float(delta), max(sites, 1))
    return WellSpec(params, float(delta))


def _flat_rayleigh(spec, n, grid_size=2001):
    # second-order interior stencil; honest but only O(h^2) accurate
    delta, mass = spec.delta, spec.params.mass
    h = delta / (grid_size + 1)
    x = np.linspace(h, delta - h, grid_size)
    psi = np.sin(n * np.pi * x / delta)
    padded = np.concatenate(([0.0], psi, [0.0]))
    acted = -(padded[2:] - 2.0 * psi + padded[:-2]) / (2.0 * mass * h * h)
    return float(np.sum(psi * acted) / np.sum(psi * psi))


def assemble_spectra(epsilon, ell, mass, delta=None, k=None, levels=None,
                     boundary=ODD_IMAGE):
    params = AlgebraParams(ell=ell, epsilon=epsilon, mass=mass)
    spec = _resolve_well(params, delta, k)
    case = spec.case_label
    if case == CASE_EPS_MINUS:
        report = lattice_well_solve(spec, boundary)
        entries = sorted(report.levels, key=lambda e: e.n)
        if levels is not None:
            entries = entries[:levels]
        rows = [{"case": case, "epsilon": epsilon, "ell": ell, "mass": mass,
                 "delta": spec.delta, "n": e.n,
                 "E_analytic": e.energy_analytic,
                 "E_numeric": e.energy_numeric, "abs_diff": e.abs_diff}
                for e in entries]
    else:
        count = 5 if levels is None else levels
        if count < 1:
            raise ValueError("levels must be positive")
        rows = []
        for n in range(1, count + 1):
            analytic = single_level(spec, n)
            if case == CASE_EPS_PLUS:
                numeric = shift_rayleigh_quotient(spec, n)
            else:
                numeric = _flat_rayleigh(spec, n)
            rows.append({"case": case, "epsilon": epsilon, "ell": ell,
                         "mass": mass, "delta": spec.delta, "n": n,
                         "E_analytic": analytic, "E_numeric": numeric,
                         "abs_diff": abs(numeric - analytic)})
    meta = {"subcommand": "spectra", "case": case, "epsilon": epsilon,
            "ell": ell, "mass": mass, "delta": spec.delta,
            "k": spec.k, "boundary": boundary,
            "levels_emitted": len(rows)}
    return meta, SPECTRA_COLUMNS, rows


def assemble_counting(epsilon, ell, delta=None, k=None, levels=5):
    params = AlgebraParams(ell=ell, epsilon=epsilon)
    spec = _resolve_well(params, delta, k)
    if levels < 1:
        raise ValueError("levels must be positive")
    count = levels
    if spec.k is not None:
        count = min(count, spec.k - 1)
        if count < 1:
            raise ValueError("the discrete well holds no states at this k")
    table = fill_table(params, spec.delta, count)
    rows = []
    for entry in table.rows:
        closed = phase_cell(params, spec.delta, entry.n)
        rows.append({"case": table.case_label, "epsilon": epsilon,
                     "ell": ell, "delta": spec.delta, "n": entry.n,
                     "p": entry.p, "dp": entry.dp, "cell": closed,
                     "cell_table": entry.cell,
                     "abs_gap": abs(entry.cell - closed),
                     "cumulative": entry.cumulative,
                     "band_edge": entry.band_edge})
    meta = {"subcommand": "counting", "case": table.case_label,
            "epsilon": epsilon, "ell": ell, "delta": spec.delta,
            "k": spec.k, "levels_emitted": len(rows)}
    return meta, COUNTING_COLUMNS, rows


def assemble_momstats(r, s_max, steps):
    if s_max <= 0.0:
        raise ValueError("s_max must be positive")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    grid = np.linspace(0.0, s_max, steps)
    rows = []
    for s in grid:
        series = bessel_j0(s * r)
        quad = char_fn_quadrature(float(s), r)
        rows.append({"s": float(s), "char_series": series,
                     "char_quadrature": quad,
                     "abs_gap": abs(series - quad)})
    meta = {"subcommand": "momstats", "r": r, "s_max": s_max,
            "steps": steps, "density_norm": density_moment(0, r),
            "second_moment": density_moment(2, r),
            "second_closed": 0.5 * r * r}
    return meta, MOMSTATS_COLUMNS, rows


def assemble_uncertainty(alpha_start, alpha_stop, steps, ell):
    if alpha_start <= 0.0:
        raise ValueError("alpha_start must be positive")
    if alpha_stop < alpha_start:
        raise ValueError("alpha_stop must be >= alpha_start")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    params = AlgebraParams(ell=ell, epsilon=1)
    rows = []
    for alpha in np.linspace(alpha_start, alpha_stop, steps):
        mom = gaussian_moments(GaussianSpec(float(alpha), params))
        bound = 0.5 * mom.cosh_mean
        closed = gaussian_product_closed(float(alpha))
        rows.append({"alpha": float(alpha), "ell": ell, "dx": mom.dx,
                     "dp": mom.dp, "product": mom.product, "bound": bound,
                     "bound_kind": BOUND_DEFORMED,
                     "satisfied": mom.product >= bound - 1e-10,
                     "x2_quad": mom.x2_quad, "p2_quad": mom.p2_quad,
                     "x2_closed": mom.x2_closed,
                     "p2_closed": mom.p2_closed,
                     "p2_closed_dev": abs(mom.p2_closed - mom.p2_quad),
                     "product_closed": closed,
                     "product_closed_dev": abs(mom.product - closed)})
    meta = {"subcommand": "uncertainty", "alpha_start": alpha_start,
            "alpha_stop": alpha_stop, "steps": steps, "ell": ell}
    return meta, UNCERTAINTY_COLUMNS, rows


def assemble_gup(c, dp_min, dp_max, steps):
    if dp_max < dp_min:
        raise ValueError("dp_max must be >= dp_min")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    curve = gup_curve(c, np.linspace(dp_min, dp_max, steps))
    rows = [{"dp": dp, "bound": b}
            for dp, b in zip(curve.dp_values, curve.bounds)]
    meta = {"subcommand": "gup", "c": c, "dp_min": dp_min,
            "dp_max": dp_max, "steps": steps, "min_dx": curve.min_dx,
            "argmin_dp": curve.argmin_dp,
            "sampled_min_dx": curve.sampled_min_dx,
            "sampled_argmin_dp": curve.sampled_argmin_dp}
    return meta, GUP_COLUMNS, rows


def assemble_dos(ell, r):
    rep = dos_product(AlgebraParams(ell=ell, epsilon=-1, r=r))
    rows = [{"ell": ell, "r": r, "mu_x_inv": rep.mu_x_inv,
             "mu_p_inv": rep.mu_p_inv, "product": rep.product,
             "small_ell_product": rep.small_ell_product}]
    meta = {"subcommand": "dos", "ell": ell, "r": r}
    return meta, DOS_COLUMNS, rows


def assemble_measures(ell, beta, tau):
    rep = measure_compare(ell, beta, tau)
    rows = [{"ell": ell, "beta": beta, "tau": tau, "z_flat": rep.z_flat,
             "z_deformed": rep.z_deformed, "z_gup": rep.z_gup}]
    meta = {"subcommand": "measures", "ell": ell, "beta": beta, "tau": tau}
    return meta, MEASURES_COLUMNS, rows
