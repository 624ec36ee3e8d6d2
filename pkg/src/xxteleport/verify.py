"""Cross-module consistency suite.

Every closed form in the package has an independent numerical route; this
module runs them against each other on seeded random grids and reports the
worst deviation per check.  The CLI `verify` subcommand is a thin wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import concurrence, thermal_concurrence
from .model import ModelParams, gibbs_state, gibbs_state_oracle
from .phase import TABLE1_REFERENCE, reproduce_table1
from .teleport import (PureQubit, apply_channel, average_fidelity,
                       channel_fidelity, mc_average_fidelity, output_fidelity,
                       protocol_oracle, quadrature_average_fidelity)

DEFAULT_TOLERANCES: dict[str, float] = {
    "gibbs-analytic-vs-matrix-exponential": 1e-10,
    "concurrence-closed-form-vs-spin-flip": 1e-10,
    "channel-vs-protocol-oracle": 1e-10,
    "pointwise-fidelity-vs-channel": 1e-12,
    "average-fidelity-vs-quadrature": 1e-10,
    "average-fidelity-vs-monte-carlo": 3.0,  # units of MC standard error
    "table1-reproduction": 1e-5,
}

_MC_POINTS = 5
_MC_SAMPLES = 200_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def random_params(rng: np.random.Generator) -> ModelParams:
    """Random model point with beta*energy bounded (safe for all oracle paths)."""
    return ModelParams(j=rng.uniform(-2.0, 2.0),
                       b_m=rng.uniform(-2.0, 2.0),
                       t=rng.uniform(0.1, 5.0))


def random_density(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Random mixed state, normalized A A^dagger with complex Gaussian A."""
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = a @ a.conj().T
    return m / np.trace(m).real


def random_pure_qubit(rng: np.random.Generator) -> PureQubit:
    """Haar-uniform input qubit: cos(theta) uniform on [-1, 1], phi on [0, 2pi)."""
    return PureQubit(theta=float(np.arccos(rng.uniform(-1.0, 1.0))),
                     phi=float(rng.uniform(0.0, 2.0 * np.pi)))


def run_verification(seed: int = 0, grid_size: int = 1000,
                     tolerances: dict[str, float] | None = None) -> list[CheckResult]:
    """Run every consistency check; deterministic for a fixed seed."""
    tol = dict(DEFAULT_TOLERANCES)
    if tolerances:
        tol.update(tolerances)
    rng = np.random.default_rng(seed)
    results = []

    params = [random_params(rng) for _ in range(grid_size)]

    dev = max(np.abs(gibbs_state(p).rho - gibbs_state_oracle(p).rho).max() for p in params)
    results.append(CheckResult("gibbs-analytic-vs-matrix-exponential", float(dev),
                               tol["gibbs-analytic-vs-matrix-exponential"]))

    dev = max(abs(thermal_concurrence(p) - concurrence(gibbs_state(p).rho).value)
              for p in params)
    results.append(CheckResult("concurrence-closed-form-vs-spin-flip", float(dev),
                               tol["concurrence-closed-form-vs-spin-flip"]))

    dev = 0.0
    for _ in range(grid_size):
        rho = random_density(rng)
        psi = random_pure_qubit(rng)
        dev = max(dev, float(np.abs(protocol_oracle(rho, psi) - apply_channel(rho, psi)).max()))
    results.append(CheckResult("channel-vs-protocol-oracle", dev,
                               tol["channel-vs-protocol-oracle"]))

    dev = 0.0
    for p in params:
        psi = random_pure_qubit(rng)
        dev = max(dev, abs(output_fidelity(p, psi.theta)
                           - channel_fidelity(gibbs_state(p).rho, psi)))
    results.append(CheckResult("pointwise-fidelity-vs-channel", dev,
                               tol["pointwise-fidelity-vs-channel"]))

    dev = max(abs(average_fidelity(p).average
                  - quadrature_average_fidelity(gibbs_state(p).rho).average)
              for p in params)
    results.append(CheckResult("average-fidelity-vs-quadrature", float(dev),
                               tol["average-fidelity-vs-quadrature"]))

    dev = 0.0
    for p in params[:_MC_POINTS]:
        mc = mc_average_fidelity(gibbs_state(p).rho, _MC_SAMPLES,
                                 seed=int(rng.integers(2**31)))
        gap = abs(mc.average - average_fidelity(p).average)
        dev = max(dev, gap / mc.stderr if mc.stderr > 0.0 else (0.0 if gap == 0.0 else np.inf))
    results.append(CheckResult("average-fidelity-vs-monte-carlo", dev,
                               tol["average-fidelity-vs-monte-carlo"]))

    dev = 0.0
    for point, (_, t_ref, cr_ref) in zip(reproduce_table1(), TABLE1_REFERENCE):
        dev = max(dev,
                  abs(point.t_critical_over_j - t_ref) / t_ref,
                  abs(point.residual_concurrence - cr_ref))
    results.append(CheckResult("table1-reproduction", dev, tol["table1-reproduction"]))

    return results
