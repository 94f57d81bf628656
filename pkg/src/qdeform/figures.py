"""Optional figure rendering for the CLI report path.

Figures are a convenience view of the same rows the delimited report
carries; nothing is computed here.  matplotlib is imported lazily with the
Agg backend so headless runs work and the import cost is only paid when
--figures is requested.  The determinism contract covers the delimited
reports, not the PNG bytes.
"""

import math
import os


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _spectra(plt, ax, rows, meta):
    ns = [row["n"] for row in rows]
    ax.plot(ns, [row["E_analytic"] for row in rows], "o-", label="analytic")
    numeric = [row["E_numeric"] for row in rows]
    if all(v is not None for v in numeric):
        ax.plot(ns, numeric, "x--", label="numeric")
    ax.set_xlabel("level n")
    ax.set_ylabel("energy")
    ax.set_title("well levels (%s)" % meta["case"])
    ax.legend()


def _counting(plt, ax, rows, meta):
    ns = [row["n"] for row in rows]
    ax.plot(ns, [row["cell"] for row in rows], "o-", label="cell")
    ax.axhline(math.pi, color="gray", lw=0.8, label="pi")
    edge = [row["n"] for row in rows if row["band_edge"]]
    if edge:
        ax.axvline(edge[0], color="red", lw=0.8, label="band edge")
    ax.set_xlabel("row n")
    ax.set_ylabel("phase-space cell")
    ax.set_title("cell per added particle (%s)" % meta["case"])
    ax.legend()


def _momstats(plt, ax, rows, meta):
    s = [row["s"] for row in rows]
    ax.plot(s, [row["char_series"] for row in rows], "-", label="series")
    ax.plot(s, [row["char_quadrature"] for row in rows], "--",
            label="quadrature")
    ax.set_xlabel("s")
    ax.set_ylabel("characteristic function")
    ax.set_title("localized-state characteristic function, r=%g" % meta["r"])
    ax.legend()


def _uncertainty(plt, ax, rows, meta):
    alphas = [row["alpha"] for row in rows]
    ax.plot(alphas, [row["product"] for row in rows], "o-", label="dx*dp")
    ax.plot(alphas, [row["bound"] for row in rows], "s--", label="bound")
    ax.set_xlabel("alpha")
    ax.set_ylabel("spread product")
    ax.set_title("gaussian family against the deformed bound")
    ax.legend()


def _gup(plt, ax, rows, meta):
    dps = [row["dp"] for row in rows]
    ax.plot(dps, [row["bound"] for row in rows], "-", label="bound")
    ax.plot([meta["argmin_dp"]], [meta["min_dx"]], "r*", ms=10,
            label="minimum")
    ax.set_xlabel("dp")
    ax.set_ylabel("dx lower bound")
    ax.set_title("quadratic-comparator bound, c=%g" % meta["c"])
    ax.legend()


def _dos(plt, ax, rows, meta):
    row = rows[0]
    keys = ("mu_x_inv", "mu_p_inv", "product", "small_ell_product")
    ax.bar(range(len(keys)), [row[k] for k in keys])
    ax.set_xticks(range(len(keys)))
    ax.set_xticklabels(keys, rotation=20)
    ax.set_title("state-density spacings, ell=%g r=%g"
                 % (row["ell"], row["r"]))


def _measures(plt, ax, rows, meta):
    row = rows[0]
    keys = ("z_flat", "z_deformed", "z_gup")
    ax.bar(range(len(keys)), [row[k] for k in keys])
    ax.set_xticks(range(len(keys)))
    ax.set_xticklabels(keys)
    ax.set_title("thermal weight of the measure densities")


_RENDERERS = {
    "spectra": _spectra,
    "counting": _counting,
    "momstats": _momstats,
    "uncertainty": _uncertainty,
    "gup": _gup,
    "dos": _dos,
    "measures": _measures,
}


def render_figure(subcommand, rows, meta, directory):
    """One PNG per run, named after the subcommand; returns its path."""
    renderer = _RENDERERS.get(subcommand)
    if renderer is None:
        return None
    plt = _pyplot()
    os.makedirs(directory, exist_ok=True)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    renderer(plt, ax, rows, meta)
    fig.tight_layout()
    path = os.path.join(directory, "%s.png" % subcommand)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
