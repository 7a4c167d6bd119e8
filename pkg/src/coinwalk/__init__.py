"""Discrete-time quantum walk on a line with a general three-parameter coin.

The walk alternates a 2x2 coin unitary ``C(theta, phi1, phi2)`` on an
internal head/tail degree of freedom with a coin-conditioned shift on a
one-dimensional lattice.  Two independent evolution engines are provided:

* :mod:`coinwalk.evolution` — the production path, a local two-term
  recurrence on the amplitude table (O(n) per step);
* :mod:`coinwalk.dense` — a reference path that materializes the one-step
  operator as an explicit unitary matrix and multiplies it out.

They are kept separate so each can validate the other; ``coinwalk verify``
(or the test suite) compares them amplitude by amplitude.

On top of the engines sit distribution diagnostics (:mod:`coinwalk.analysis`)
and coin-position entanglement measures (:mod:`coinwalk.entanglement`).
"""

from .analysis import PhaseDiagram, peak_gap, phase_diagram, symmetry_deviation, theta_sweep
from .coin import NAMED_COINS, CoinParams, check_unitary, make_coin, named_coin
from .dense import (
    StepUnitary,
    build_shift_matrix,
    build_step_unitary,
    dense_amplitudes,
    evolve_dense,
)
from .entanglement import (
    SchmidtSpectrum,
    entanglement_entropy,
    is_separable,
    schmidt_spectrum,
)
from .evolution import evolve, run_walk, step_recurrence
from .state import (
    UNBIASED_INIT,
    LatticeExhaustedError,
    LatticeSpec,
    ProbabilityDistribution,
    WalkerState,
    distribution,
    initial_state,
    position_index,
    probability_at,
    total_probability,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # coin
    "CoinParams",
    "NAMED_COINS",
    "make_coin",
    "named_coin",
    "check_unitary",
    # state
    "LatticeExhaustedError",
    "LatticeSpec",
    "WalkerState",
    "ProbabilityDistribution",
    "UNBIASED_INIT",
    "initial_state",
    "position_index",
    "probability_at",
    "distribution",
    "total_probability",
    # evolution engines
    "step_recurrence",
    "evolve",
    "run_walk",
    "StepUnitary",
    "build_shift_matrix",
    "build_step_unitary",
    "dense_amplitudes",
    "evolve_dense",
    # analysis
    "PhaseDiagram",
    "peak_gap",
    "symmetry_deviation",
    "theta_sweep",
    "phase_diagram",
    # entanglement
    "SchmidtSpectrum",
    "schmidt_spectrum",
    "is_separable",
    "entanglement_entropy",
]
