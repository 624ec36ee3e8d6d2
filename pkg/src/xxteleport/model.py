"""Two-qubit XX chain in a uniform z field: Hamiltonian, spectrum, thermal state.

    H = (J/2)(sx (x) sx + sy (x) sy) + (B_m/2)(sz (x) 1 + 1 (x) sz)

in the computational basis |00>, |01>, |10>, |11> with the left tensor factor
qubit A.  The eigenbasis is |00>, |Psi+>, |Psi->, |11> where
|Psi+-> = (|01> +- |10>)/sqrt(2), with energies B_m, +J, -J, -B_m.  Units set
Boltzmann's constant to 1, so beta = 1/T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import SIGMA, kron

KET_00 = np.array([1, 0, 0, 0], dtype=complex)
KET_11 = np.array([0, 0, 0, 1], dtype=complex)
PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2)
PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
for _k in (KET_00, KET_11, PSI_PLUS, PSI_MINUS):
    _k.flags.writeable = False

# Largest |beta * energy| the matrix-exponential path accepts before exp overflows.
MAX_BETA_ENERGY = 700.0


@dataclass(frozen=True)
class ModelParams:
    """Coupling j, field b_m and temperature t (all in the same energy units)."""

    j: float
    b_m: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.j) and math.isfinite(self.b_m) and math.isfinite(self.t)):
            raise ValueError("model parameters must be finite")
        if self.t <= 0.0:
            raise ValueError(f"temperature must be positive, got {self.t}")

    @property
    def beta(self) -> float:
        return 1.0 / self.t

    @property
    def eta(self) -> float:
        """Field ratio b_m / j; undefined for j = 0."""
        if self.j == 0.0:
            raise ValueError("eta is undefined for j = 0")
        return self.b_m / self.j


@dataclass(frozen=True)
class ThermalState:
    """Equilibrium density matrix (4x4) together with its partition function."""

    rho: np.ndarray
    z: float


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """4x4 Hermitian XX Hamiltonian for the given coupling and field."""
    sx, sy, sz, s0 = SIGMA[1], SIGMA[2], SIGMA[3], SIGMA[0]
    return (0.5 * p.j * (kron(sx, sx) + kron(sy, sy))
            + 0.5 * p.b_m * (kron(sz, s0) + kron(s0, sz)))


def analytic_spectrum(p: ModelParams) -> list[tuple[float, np.ndarray]]:
    """The four exact eigenpairs: (B_m, |00>), (J, |Psi+>), (-J, |Psi->), (-B_m, |11>)."""
    return [(p.b_m, KET_00), (p.j, PSI_PLUS), (-p.j, PSI_MINUS), (-p.b_m, KET_11)]


def partition_function(p: ModelParams) -> float:
    """Z = 2 cosh(beta B_m) + 2 cosh(beta J).  Overflows to inf for beta*energy > ~710."""
    with np.errstate(over="ignore"):
        return float(2.0 * np.cosh(p.beta * p.b_m) + 2.0 * np.cosh(p.beta * p.j))


def hyperbolic_weights(p: ModelParams) -> tuple[float, float, float, float]:
    """(cosh beta*B_m, cosh beta*J, sinh beta*J, 1), all scaled by a common factor.

    The common factor is exp(-max(beta|J|, beta|B_m|)), so no component can
    overflow at any temperature.  Every closed form built from these is a
    ratio that is homogeneous of degree one, hence unaffected by the scale;
    the fourth component carries the scale for terms with a bare constant.
    """
    a = p.beta * abs(p.j)
    b = p.beta * abs(p.b_m)
    m = max(a, b)
    ch_b = 0.5 * (np.exp(b - m) + np.exp(-b - m))
    ch_j = 0.5 * (np.exp(a - m) + np.exp(-a - m))
    sh_j = math.copysign(0.5 * (np.exp(a - m) - np.exp(-a - m)), p.j)
    return float(ch_b), float(ch_j), float(sh_j), float(np.exp(-m))


def _populations(p: ModelParams) -> np.ndarray:
    """Boltzmann weights of |00>, |Psi+>, |Psi->, |11>, max-shifted so large
    beta cannot overflow."""
    energies = np.array([p.b_m, p.j, -p.j, -p.b_m])
    x = -p.beta * energies
    w = np.exp(x - x.max())
    return w / w.sum()


def gibbs_state(p: ModelParams) -> ThermalState:
    """Thermal state from the closed-form populations (no matrix exponential)."""
    pop = _populations(p)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = pop[0]
    rho[3, 3] = pop[3]
    rho[1, 1] = rho[2, 2] = 0.5 * (pop[1] + pop[2])
    rho[1, 2] = rho[2, 1] = 0.5 * (pop[1] - pop[2])
    rho.flags.writeable = False
    return ThermalState(rho=rho, z=partition_function(p))


def gibbs_state_oracle(p: ModelParams) -> ThermalState:
    """Thermal state by numerically exponentiating H; cross-validation path only."""
    from .linalg import hermitian_function, trace

    beta = p.beta
    if abs(beta * p.j) > MAX_BETA_ENERGY or abs(beta * p.b_m) > MAX_BETA_ENERGY:
        raise ValueError("beta*energy too large for the matrix-exponential path")
    em = hermitian_function(build_hamiltonian(p), lambda x: np.exp(-beta * x))
    z = trace(em).real
    rho = em / z
    rho.flags.writeable = False
    return ThermalState(rho=rho, z=z)
