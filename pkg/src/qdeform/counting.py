"""Phase-space cost of adding one more fermion to a box.

Fermions fill the well levels of `wells` one per state.  The cell for the
(n+1)st particle is dp * delta, the momentum increment times the box width.
Undeformed, every cell is pi.  For epsilon = +1 the increments grow with n
(sinh ladder), so each particle is costlier than the last.  For epsilon = -1
the increments shrink (sin ladder) until the band edge, beyond which the
folded spectrum makes dp negative; those rows are kept and flagged rather
than dropped, since the fold is physics, not an artifact.

The closed forms come from the sum-to-product identities

    sinh((n+1)a) - sinh(na) = 2 sinh(a/2) cosh(a(n+1/2))
    sin((n+1)a)  - sin(na)  = 2 sin(a/2)  cos(a(n+1/2))

with a = pi*ell/delta (= pi/k on the lattice), and are checked against the
table route row by row.  Mass enters the momenta but cancels in every cell;
it is recorded for provenance only.
"""

import math
from dataclasses import dataclass

import numpy as np

from .wells import WellSpec, single_level


@dataclass(frozen=True)
class CellRow:
    n: int
    p: float
    dp: float
    cell: float
    cumulative: float
    band_edge: bool = False


@dataclass(frozen=True)
class CellTable:
    case_label: str
    rows: tuple
    delta: float
    k: int | None = None
    mass: float = 1.0

    @property
    def total_fill(self):
        return self.rows[-1].cumulative if self.rows else 0.0


def _well_spec(params, delta):
    if params.ell > 0.0 and params.epsilon == -1:
        k = int(round(delta / params.ell))
        return WellSpec(params, delta, max(k, 1))
    return WellSpec(params, delta)


def phase_cell(params, delta, n):
    """Closed-form phase-space increment for the (n+1)st particle.

    Exactly pi when ell = 0; the deformed cases evaluate the product form
    directly, without going through the level ladder.
    """
    if n < 0:
        raise ValueError("particle index n starts at 0")
    if delta <= 0.0:
        raise ValueError("box width delta must be positive")
    if params.ell == 0.0:
        return math.pi
    if params.epsilon == 1:
        a = math.pi * params.ell / delta
        return (2.0 * delta / params.ell) * math.sinh(0.5 * a) \
            * math.cosh(a * (n + 0.5))
    spec = _well_spec(params, delta)
    k = spec.k
    if n + 1 > k - 1:
        raise ValueError("no level left for the (n+1)st particle (n+1 > k-1)")
    return 2.0 * k * math.sin(math.pi / (2.0 * k)) \
        * math.cos((math.pi / k) * (n + 0.5))


def fill_table(params, delta, count):
    """Fill the first `count` levels; one row per added particle.

    Row n holds the momentum of the particle placed in level n+1, the
    increment over the previous top momentum, the cell dp*delta, and the
    running total.  Rows past the epsilon = -1 band edge carry negative
    cells and a band_edge flag.
    """
    if count < 1:
        raise ValueError("particle count must be at least 1")
    spec = _well_spec(params, delta)
    if spec.case_label == "eps_minus" and count > spec.k - 1:
        raise ValueError("the discrete well holds only k-1 particles")
    momenta = [0.0]
    for level in range(1, count + 1):
        e = single_level(spec, level)
        momenta.append(float(np.sqrt(2.0 * params.mass * e)))
    rows = []
    running = 0.0
    for n in range(count):
        p = momenta[n + 1]
        dp = p - momenta[n]
        cell = dp * delta
        running += cell
        edge = spec.case_label == "eps_minus" and 2 * n + 1 > spec.k
        rows.append(CellRow(n, p, dp, cell, running, edge))
    return CellTable(spec.case_label, tuple(rows), float(delta),
                     spec.k if spec.case_label == "eps_minus" else None,
                     params.mass)
