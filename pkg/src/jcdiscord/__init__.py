"""Jaynes-Cummings atom-field dynamics under intrinsic (pure) dephasing.

Closed-form evolution of a two-level atom coupled to one quantized field
mode, with geometric-discord and negativity diagnostics for the resulting
qubit-qudit states, steady-state analysis and parameter-sweep experiment
runners.
"""

from .correlations import (
    CorrelationReport,
    SchmidtSpectrum,
    StateDiagnostics,
    correlation_report,
    geometric_discord,
    geometric_discord_oracle,
    negativity,
    pure_state_discord,
    schmidt_spectrum,
    state_diagnostics,
)
from .dephasing import (
    BlockedState,
    CoherentState,
    InitialState,
    NumberState,
    TruncationError,
    dephasing_projection,
    evolve_general,
    evolve_number,
    field_initial_coefficients,
    master_equation_residual,
    steady_state_general,
    steady_state_number,
)
from .jcm import (
    DressedManifold,
    ModelParams,
    dressed_eigensystem,
    ground_energy,
    hamiltonian_matrix,
    level_energy,
    mixing_angle,
    rabi_frequency,
    transition_frequency,
)
from .su_bloch import (
    BlochDecomposition,
    GeneratorBasis,
    bloch_decompose,
    bloch_reconstruct,
    su_generators,
)

__version__ = "0.1.0"

__all__ = [
    "BlochDecomposition",
    "BlockedState",
    "CoherentState",
    "CorrelationReport",
    "DressedManifold",
    "GeneratorBasis",
    "InitialState",
    "ModelParams",
    "NumberState",
    "SchmidtSpectrum",
    "StateDiagnostics",
    "TruncationError",
    "__version__",
    "bloch_decompose",
    "bloch_reconstruct",
    "correlation_report",
    "dephasing_projection",
    "dressed_eigensystem",
    "evolve_general",
    "evolve_number",
    "field_initial_coefficients",
    "geometric_discord",
    "geometric_discord_oracle",
    "ground_energy",
    "hamiltonian_matrix",
    "level_energy",
    "master_equation_residual",
    "mixing_angle",
    "negativity",
    "pure_state_discord",
    "rabi_frequency",
    "schmidt_spectrum",
    "state_diagnostics",
    "steady_state_general",
    "steady_state_number",
    "su_generators",
    "transition_frequency",
]
