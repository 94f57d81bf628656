"""Numerical laboratory for position-momentum algebras deformed by a
fundamental length.

The package builds finite matrix realizations of the deformed bracket
relations, solves the square well under the three kinetic operators, counts
phase-space cells for fermion filling, works out the momentum statistics of
sharply localized states, and checks the modified uncertainty relations,
with a CLI that emits deterministic delimited reports.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraParams,
    GridState,
    OperatorRep,
    algebra_residuals,
    build_circle_rep,
    build_fourier_rep,
    build_hyperbola_rep,
    commutator,
    im_from_p,
)
from .counting import fill_table, phase_cell
from .momentum import (
    MomentumLaw,
    arcsine_density,
    bessel_j0,
    char_fn,
    dos_product,
    invert_char_fn,
)
from .uncertainty import (
    GaussianSpec,
    UncertaintyReport,
    angle_bound,
    deformed_bound_check,
    gaussian_moments,
    gup_curve,
    kempf_operator_check,
    localized_state_check,
    measure_compare,
)
from .wells import (
    WellSpec,
    analytic_levels,
    continuum_shift_residual,
    ground_state_scan,
    lattice_well_solve,
)

__all__ = [
    "AlgebraParams",
    "GaussianSpec",
    "GridState",
    "MomentumLaw",
    "OperatorRep",
    "UncertaintyReport",
    "WellSpec",
    "__version__",
    "algebra_residuals",
    "analytic_levels",
    "angle_bound",
    "arcsine_density",
    "bessel_j0",
    "build_circle_rep",
    "build_fourier_rep",
    "build_hyperbola_rep",
    "char_fn",
    "commutator",
    "continuum_shift_residual",
    "deformed_bound_check",
    "dos_product",
    "fill_table",
    "gaussian_moments",
    "ground_state_scan",
    "gup_curve",
    "im_from_p",
    "invert_char_fn",
    "kempf_operator_check",
    "localized_state_check",
    "measure_compare",
    "phase_cell",
]
