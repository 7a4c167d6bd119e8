"""Production evolution engine: the local two-term recurrence.

One step of the walk is coin-then-shift.  Written out per site, the updated
amplitudes depend only on the two coin components of the neighbouring sites:

    alpha_x(t+1) = C00 * alpha_{x-1}(t) + C01 * beta_{x-1}(t)
    beta_x(t+1)  = C10 * alpha_{x+1}(t) + C11 * beta_{x+1}(t)

so a step is two shifted axpy operations on the ``(2, n)`` amplitude table —
O(n) work and no operator matrix at all.  Each step writes into a fresh
array (the classic read-buffer/write-buffer pair), leaving the input state
untouched.
"""

from __future__ import annotations

import numpy as np

from .coin import CoinParams, make_coin
from .state import (
    LatticeExhaustedError,
    LatticeSpec,
    ProbabilityDistribution,
    WalkerState,
    distribution,
    initial_state,
)

__all__ = ["step_recurrence", "evolve", "run_walk"]


def step_recurrence(state: WalkerState, coin: np.ndarray) -> WalkerState:
    """Advance the walker by one coin-then-shift step.

    Parameters
    ----------
    state : WalkerState
        Current state; ``state.time`` must be below the lattice half-width,
        otherwise amplitude would spill into the guard sites.
    coin : numpy.ndarray
        The (2, 2) complex coin matrix.

    Returns
    -------
    WalkerState
        A new state at ``time + 1``; the input is not modified.

    Raises
    ------
    LatticeExhaustedError
        If the lattice window is used up (``time >= half_width``).
    """
    n = state.lattice.half_width
    if state.time >= n:
        raise LatticeExhaustedError(
            f"lattice with half_width={n} supports at most {n} steps and the "
            f"walker is already at t={state.time}; rebuild the walk on a "
            f"lattice with a larger half_width to evolve further"
        )
    c = np.asarray(coin, dtype=np.complex128)
    if c.shape != (2, 2):
        raise ValueError(f"coin must be a (2, 2) matrix, got shape {c.shape}")
    amp = state.amplitudes
    out = np.zeros_like(amp)
    # Interior columns 1..n-2 receive from their left/right neighbours; the
    # guard columns stay exactly zero.
    out[0, 1:-1] = c[0, 0] * amp[0, :-2] + c[0, 1] * amp[1, :-2]
    out[1, 1:-1] = c[1, 0] * amp[0, 2:] + c[1, 1] * amp[1, 2:]
    return WalkerState(out, state.lattice, state.time + 1)


def evolve(state: WalkerState, coin: np.ndarray, steps: int) -> WalkerState:
    """Apply ``steps`` walk steps; ``steps=0`` returns the state unchanged.

    Raises
    ------
    ValueError
        If ``steps`` is negative.
    LatticeExhaustedError
        If the walk would run past the end of the lattice window.
    """
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    for _ in range(steps):
        state = step_recurrence(state, coin)
    return state


def run_walk(
    params: CoinParams,
    alpha: complex,
    beta: complex,
    steps: int,
) -> ProbabilityDistribution:
    """Run a fresh ``steps``-step walk from the origin and measure it.

    The lattice is sized exactly to the walk (``half_width = steps``), so the
    result covers positions ``-(steps+1) .. steps+1`` with the two outermost
    (guard) entries always zero.

    Parameters
    ----------
    params : CoinParams
        Coin angle triple.
    alpha, beta : complex
        Normalized initial coin amplitudes.
    steps : int
        Number of steps (positive).

    Returns
    -------
    ProbabilityDistribution
        The position distribution after ``steps`` steps.
    """
    if steps < 1:
        raise ValueError(f"steps must be positive, got {steps}")
    coin = make_coin(params)
    state = initial_state(alpha, beta, LatticeSpec(steps))
    state = evolve(state, coin, steps)
    return distribution(state)
