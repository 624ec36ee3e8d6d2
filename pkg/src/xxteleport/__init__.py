"""Thermal entanglement and teleportation fidelity of the two-qubit Heisenberg XX chain."""

__version__ = "0.1.0"

from .entanglement import (AlwaysSeparableError, ConcurrenceBreakdown, concurrence,
                           thermal_concurrence, zero_entanglement_temperature)
from .linalg import (SIGMA, HermitianEigenDecomposition, adjoint, eigh,
                     hermitian_function, kron, matmul, trace)
from .model import (ModelParams, ThermalState, analytic_spectrum, build_hamiltonian,
                    gibbs_state, gibbs_state_oracle, partition_function)
from .phase import (TABLE1_REFERENCE, CriticalPoint, NoClassicalAdvantageError,
                    SweepRecord, better_than_classical, critical_temperature,
                    reproduce_table1, residual_concurrence, sweep)
from .teleport import (BellProjectorSet, ChannelWeights, FidelityReport, PureQubit,
                       apply_channel, average_fidelity, bell_projectors, bell_weights,
                       channel_fidelity, mc_average_fidelity, output_fidelity,
                       protocol_oracle, quadrature_average_fidelity)
from .verify import CheckResult, run_verification

__all__ = [
    "__version__",
    "SIGMA", "HermitianEigenDecomposition", "kron", "eigh", "hermitian_function",
    "adjoint", "trace", "matmul",
    "ModelParams", "ThermalState", "build_hamiltonian", "analytic_spectrum",
    "partition_function", "gibbs_state", "gibbs_state_oracle",
    "ConcurrenceBreakdown", "AlwaysSeparableError", "concurrence",
    "thermal_concurrence", "zero_entanglement_temperature",
    "PureQubit", "BellProjectorSet", "ChannelWeights", "FidelityReport",
    "bell_projectors", "bell_weights", "apply_channel", "channel_fidelity",
    "output_fidelity", "average_fidelity", "mc_average_fidelity",
    "quadrature_average_fidelity", "protocol_oracle",
    "CriticalPoint", "SweepRecord", "NoClassicalAdvantageError", "TABLE1_REFERENCE",
    "better_than_classical", "critical_temperature", "residual_concurrence",
    "reproduce_table1", "sweep",
    "CheckResult", "run_verification",
]
