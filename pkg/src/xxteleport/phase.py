"""Where the thermal channel beats classical teleportation.

The average fidelity exceeds the classical ceiling 2/3 exactly when
sinh(J/T) > cosh(B_m/T), which requires B_m < J.  For eta = B_m/J in (0, 1)
the boundary temperature solves sinh(x) = cosh(eta*x) in x = J/T; the
concurrence still present at that boundary is the residual concurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entanglement import thermal_concurrence
from .model import ModelParams, hyperbolic_weights
from .teleport import average_fidelity

ARCSINH_1 = float(np.arcsinh(1.0))  # ln(1 + sqrt 2)
BRACKET_HIGH = 50.0
ROOT_TOL = 1e-12
_MAX_BISECTIONS = 200

# Six-significant-figure reference rows (eta, T_c/J, residual concurrence)
# used as the golden values for the table1 check.
TABLE1_REFERENCE: tuple[tuple[float, float, float], ...] = (
    (0.1, 1.13105, 0.00161554),
    (0.2, 1.12029, 0.00654425),
    (0.3, 1.10193, 0.0150472),
    (0.4, 1.07525, 0.0276166),
    (0.5, 1.03904, 0.045085),
    (0.6, 0.991262, 0.068864),
    (0.7, 0.928278, 0.101495),
    (0.8, 0.842666, 0.148196),
    (0.9, 0.714112, 0.223103),
)
TABLE1_TOLERANCE = 1e-5


class NoClassicalAdvantageError(ValueError):
    """No temperature yields average fidelity above 2/3 (requires B_m < J)."""


@dataclass(frozen=True)
class CriticalPoint:
    """Solution of sinh(x) = cosh(eta*x) expressed as a boundary temperature."""

    eta: float
    t_critical_over_j: float
    residual_concurrence: float
    solver_residual: float


@dataclass(frozen=True)
class SweepRecord:
    j: float
    b_m: float
    t: float
    concurrence: float
    avg_fidelity: float
    beats_classical: bool


def better_than_classical(p: ModelParams) -> bool:
    """True iff the average fidelity strictly exceeds 2/3: sinh(bJ) > cosh(bB_m)."""
    ch_b, _, sh_j, _ = hyperbolic_weights(p)
    return bool(sh_j > ch_b)


def _boundary_gap(x: float, eta: float) -> float:
    return float(np.sinh(x) - np.cosh(eta * x))


def critical_temperature(eta: float, j: float = 1.0) -> CriticalPoint:
    """Boundary temperature (in units of j) below which the channel beats 2/3.

    Bisection on x = J/T over [arcsinh(1), 50]; the bracket is valid for every
    eta in (0, 1) and the root is unique there.
    """
    if j <= 0.0:
        raise ValueError(f"j must be positive, got {j}")
    if eta >= 1.0:
        raise NoClassicalAdvantageError(
            f"no classical-beating temperature exists for B_m >= J (eta = {eta})")
    if eta <= 0.0:
        raise ValueError(f"eta must lie in (0, 1), got {eta}")

    lo, hi = ARCSINH_1, BRACKET_HIGH
    f_lo = _boundary_gap(lo, eta)
    x, f_x = lo, f_lo
    for _ in range(_MAX_BISECTIONS):
        x = 0.5 * (lo + hi)
        f_x = _boundary_gap(x, eta)
        if abs(f_x) < ROOT_TOL:
            break
        if (f_x < 0.0) == (f_lo < 0.0):
            lo, f_lo = x, f_x
        else:
            hi = x
    t_over_j = 1.0 / x
    cr = thermal_concurrence(ModelParams(j=1.0, b_m=eta, t=t_over_j))
    return CriticalPoint(eta=eta, t_critical_over_j=t_over_j,
                         residual_concurrence=cr, solver_residual=abs(f_x))


def residual_concurrence(eta: float) -> float:
    """Thermal concurrence left at the classical-beating boundary for this eta."""
    return critical_temperature(eta).residual_concurrence


def reproduce_table1() -> list[CriticalPoint]:
    """Critical points for eta = 0.1 .. 0.9 in steps of 0.1."""
    return [critical_temperature(round(0.1 * k, 1)) for k in range(1, 10)]


def sweep(j: float, eta_grid: Sequence[float], t_grid: Sequence[float]) -> list[SweepRecord]:
    """Concurrence / fidelity / threshold over a grid, eta-major then T.

    eta >= 1 is a legitimate regime here (entangled yet never classical
    beating), not an error.
    """
    records = []
    for eta in eta_grid:
        for t in t_grid:
            p = ModelParams(j=j, b_m=eta * j, t=t)
            records.append(SweepRecord(
                j=j,
                b_m=p.b_m,
                t=t,
                concurrence=thermal_concurrence(p),
                avg_fidelity=average_fidelity(p).average,
                beats_classical=better_than_classical(p),
            ))
    return records
