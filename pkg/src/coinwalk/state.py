"""Walker states on a finite, padded one-dimensional lattice.

A walk that runs for at most ``N`` steps from the origin can only reach
positions ``x`` with ``|x| <= N``.  The lattice therefore stores the window
``x = -(N+1) .. N+1`` — the reachable sites plus one guard site at each end —
as ``n = 2N + 3`` columns of a ``(2, n)`` complex amplitude array.  Row 0
holds the head (|H>, historically "alpha") amplitudes and row 1 the tail
(|T>, "beta") amplitudes.  Position ``x`` lives at zero-based column
``x + N + 1``; the origin sits at column ``N + 1``.

The guard columns (0 and ``n - 1``) hold exact zeros for every time
``t <= N``, which is what makes the finite window an exact representation of
the infinite line for walks of at most ``N`` steps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
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
]

#: Head/tail amplitudes (1/sqrt(2), -i/sqrt(2)) of the unbiased start state,
#: which drives a left/right symmetric walk for every real-entried coin.
UNBIASED_INIT: tuple[complex, complex] = (1.0 / math.sqrt(2.0), -1j / math.sqrt(2.0))

_NORM_TOL = 1e-10


class LatticeExhaustedError(ValueError):
    """Raised when a walk is asked to evolve beyond the steps its lattice supports."""


@dataclass(frozen=True)
class LatticeSpec:
    """Geometry of the padded walk window.

    Parameters
    ----------
    half_width : int
        Maximum number of steps ``N`` the lattice supports (positive).
    """

    half_width: int

    def __post_init__(self) -> None:
        if not isinstance(self.half_width, (int, np.integer)) or isinstance(self.half_width, bool):
            raise ValueError(f"half_width must be an integer, got {self.half_width!r}")
        if self.half_width < 1:
            raise ValueError(f"half_width must be positive, got {self.half_width}")
        object.__setattr__(self, "half_width", int(self.half_width))

    @property
    def size(self) -> int:
        """Number of stored sites, ``2 * half_width + 3`` (window plus guards)."""
        return 2 * self.half_width + 3

    @property
    def origin_index(self) -> int:
        """Zero-based column of position 0, ``half_width + 1``."""
        return self.half_width + 1

    @property
    def positions(self) -> np.ndarray:
        """All stored positions ``-(N+1) .. N+1`` in increasing order."""
        return np.arange(-(self.half_width + 1), self.half_width + 2)


def position_index(x: int, lattice: LatticeSpec) -> int:
    """Map a position label to its zero-based column index, ``x + N + 1``.

    Raises
    ------
    IndexError
        If ``|x| > N + 1`` (outside the stored window).
    """
    n = lattice.half_width
    if x < -(n + 1) or x > n + 1:
        raise IndexError(
            f"position {x} is outside the stored window [{-(n + 1)}, {n + 1}] "
            f"of a lattice with half_width={n}"
        )
    return x + n + 1


@dataclass(frozen=True)
class WalkerState:
    """Full coin-position amplitude table of the walker at a fixed time.

    Attributes
    ----------
    amplitudes : numpy.ndarray
        Complex array of shape ``(2, lattice.size)``; row 0 is the head
        component, row 1 the tail component.
    lattice : LatticeSpec
        The window geometry the columns refer to.
    time : int
        Number of steps taken since the initial state (non-negative).
    """

    amplitudes: np.ndarray
    lattice: LatticeSpec
    time: int = 0

    def __post_init__(self) -> None:
        amp = np.asarray(self.amplitudes, dtype=np.complex128)
        expected = (2, self.lattice.size)
        if amp.shape != expected:
            raise ValueError(
                f"amplitude array has shape {amp.shape}, expected {expected} "
                f"for half_width={self.lattice.half_width}"
            )
        if self.time < 0:
            raise ValueError(f"time must be non-negative, got {self.time}")
        object.__setattr__(self, "amplitudes", amp)


@dataclass(frozen=True)
class ProbabilityDistribution:
    """Measured position distribution of a walker state.

    Attributes
    ----------
    positions : numpy.ndarray
        Strictly increasing integer position labels.
    probs : numpy.ndarray
        Probability at each position; entries in [0, 1] and summing to 1
        (both up to a 1e-10 absolute tolerance).
    time : int
        The step count the distribution was measured at.
    """

    positions: np.ndarray = field(repr=False)
    probs: np.ndarray = field(repr=False)
    time: int = 0

    def __post_init__(self) -> None:
        pos = np.asarray(self.positions, dtype=np.int64)
        p = np.asarray(self.probs, dtype=np.float64)
        if pos.ndim != 1 or p.ndim != 1 or pos.shape != p.shape:
            raise ValueError(
                f"positions and probs must be 1-D arrays of equal length, "
                f"got shapes {pos.shape} and {p.shape}"
            )
        if pos.size and np.any(np.diff(pos) <= 0):
            raise ValueError("positions must be strictly increasing")
        if p.size and (np.min(p) < -_NORM_TOL or np.max(p) > 1.0 + _NORM_TOL):
            raise ValueError("probabilities must lie in [0, 1]")
        total = float(np.sum(p))
        if abs(total - 1.0) > _NORM_TOL:
            raise ValueError(f"probabilities must sum to 1, got {total!r}")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "probs", p)

    def probability(self, x: int) -> float:
        """Probability at position ``x`` (0.0 for positions outside the window)."""
        hits = np.nonzero(self.positions == x)[0]
        return float(self.probs[hits[0]]) if hits.size else 0.0


def initial_state(alpha: complex, beta: complex, lattice: LatticeSpec) -> WalkerState:
    """Place the walker at the origin with coin state ``alpha |H> + beta |T>``.

    Parameters
    ----------
    alpha, beta : complex
        Coin amplitudes; must satisfy ``|alpha|^2 + |beta|^2 = 1`` within 1e-10.
    lattice : LatticeSpec
        The window to allocate.

    Raises
    ------
    ValueError
        If the coin state is not normalized; the message reports the deficit.
    """
    alpha = complex(alpha)
    beta = complex(beta)
    if not (cmath.isfinite(alpha) and cmath.isfinite(beta)):
        raise ValueError(f"coin amplitudes must be finite, got alpha={alpha!r}, beta={beta!r}")
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1.0) > _NORM_TOL:
        raise ValueError(
            f"coin state must be normalized: |alpha|^2 + |beta|^2 = {norm!r} "
            f"deviates from 1 by {norm - 1.0:.3e}"
        )
    amp = np.zeros((2, lattice.size), dtype=np.complex128)
    amp[0, lattice.origin_index] = alpha
    amp[1, lattice.origin_index] = beta
    return WalkerState(amp, lattice, time=0)


def probability_at(state: WalkerState, x: int) -> float:
    """Probability of finding the walker at position ``x``, coin traced out."""
    idx = position_index(x, state.lattice)
    col = state.amplitudes[:, idx]
    return float(np.sum(np.abs(col) ** 2))


def total_probability(state: WalkerState) -> float:
    """Sum of ``|amplitude|^2`` over the whole table (1 for a physical state)."""
    return float(np.sum(np.abs(state.amplitudes) ** 2))


def distribution(state: WalkerState) -> ProbabilityDistribution:
    """Measure the walker: the position distribution over the full stored window.

    Returns one entry per stored site, positions ``-(N+1) .. N+1`` — the guard
    sites are included and carry probability 0 for any state produced by at
    most ``N`` steps.
    """
    probs = np.sum(np.abs(state.amplitudes) ** 2, axis=0)
    return ProbabilityDistribution(state.lattice.positions, probs, time=state.time)
