"""Two-qubit entanglement measures for the XX thermal state.

Provides the general spin-flip concurrence for arbitrary two-qubit density
matrices, its closed form for the XX thermal state,

    C = max{ (|sinh beta*J| - 1) / (cosh beta*B_m + cosh beta*J), 0 },

and the field-independent temperature above which it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import SIGMA, hermitian_function, kron, validate_density
from .model import ModelParams, hyperbolic_weights

# sigma_y (x) sigma_y, the spin-flip conjugation.
SPIN_FLIP = kron(SIGMA[2], SIGMA[2])
SPIN_FLIP.flags.writeable = False

# Spectrum values of the spin-flipped product above this (negative) threshold
# are roundoff and get clamped to zero; anything below is a logic error.
NEGATIVE_EIG_TOL = 1e-10


class AlwaysSeparableError(ValueError):
    """No coupling means no thermal entanglement at any temperature."""


@dataclass(frozen=True)
class ConcurrenceBreakdown:
    """Square-rooted spectrum of the spin-flipped product, plus the concurrence."""

    lambdas: tuple[float, float, float, float]
    value: float


def concurrence(rho) -> ConcurrenceBreakdown:
    """Concurrence of an arbitrary two-qubit density matrix.

    The spin-flipped product rho (sy(x)sy) rho* (sy(x)sy) shares its spectrum
    with the Hermitian-symmetrized matrix W W^dagger, W = sqrt(rho) (sy(x)sy)
    sqrt(rho)^T, so its square-rooted eigenvalues are the singular values of
    W.  Computing them that way avoids taking sqrt of near-zero eigenvalues,
    which would cost half the working precision on almost-pure states.  The
    concurrence is max(l1 - l2 - l3 - l4, 0) over the decreasing l_k.
    """
    rho = validate_density(rho, dim=4)
    sq = hermitian_function(rho, lambda x: np.sqrt(max(x, 0.0)))
    w = np.linalg.svd(sq @ SPIN_FLIP @ sq.T, compute_uv=False)
    if not np.all(np.isfinite(w)) or w.min() < -NEGATIVE_EIG_TOL:
        raise FloatingPointError(
            f"spin-flip spectrum out of range: {w.min():.3e}")
    lam = np.sort(np.clip(w, 0.0, None))[::-1]
    value = max(float(lam[0] - lam[1] - lam[2] - lam[3]), 0.0)
    return ConcurrenceBreakdown(lambdas=tuple(float(x) for x in lam), value=value)


def thermal_concurrence(p: ModelParams) -> float:
    """Closed-form concurrence of the XX thermal state.

    Depends on |J| and |B_m| only, so it is exactly invariant under sign
    flips of either parameter.
    """
    ch_b, ch_j, sh_j, scale = hyperbolic_weights(p)
    return max((abs(sh_j) - scale) / (ch_b + ch_j), 0.0)


def zero_entanglement_temperature(j: float) -> float:
    """Temperature above which the thermal concurrence vanishes, |J|/ln(1 + sqrt 2).

    Field independent: the concurrence is zero exactly when sinh(beta|J|) <= 1.
    """
    if j == 0.0:
        raise AlwaysSeparableError("thermal state is separable at every temperature for j = 0")
    return abs(j) / float(np.arcsinh(1.0))
