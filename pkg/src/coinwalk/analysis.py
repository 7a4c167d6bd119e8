"""Distribution diagnostics and parameter sweeps.

Two scalar summaries drive the parameter studies:

* ``peak_gap`` — the height difference between the largest and second-largest
  probability.  A symmetric two-peaked distribution scores ~0, a distribution
  with one dominant peak scores high, so sweeping it over the coin phases
  maps out where the walk is asymmetric.
* ``symmetry_deviation`` — the worst-case difference ``|P(x) - P(-x)|``,
  i.e. how far the distribution is from exact left/right symmetry.

``theta_sweep`` and ``phase_diagram`` run independent walks per grid point
(same initial coin state, same step count) and collect these summaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coin import CoinParams
from .evolution import run_walk
from .state import ProbabilityDistribution

__all__ = [
    "PhaseDiagram",
    "peak_gap",
    "symmetry_deviation",
    "theta_sweep",
    "phase_diagram",
]


def peak_gap(dist: ProbabilityDistribution) -> float:
    """Height of the global probability maximum over the runner-up.

    Computed as ``max(P) - second_max(P)`` with multiplicity: if the global
    maximum value occurs at two or more positions the gap is exactly 0.

    Raises
    ------
    ValueError
        If the distribution has fewer than two positions (no runner-up).
    """
    p = dist.probs
    if p.size < 2:
        raise ValueError(
            f"peak gap needs at least two positions, got {p.size}"
        )
    top_two = np.partition(p, p.size - 2)[-2:]
    return float(top_two[1] - top_two[0])


def symmetry_deviation(dist: ProbabilityDistribution) -> float:
    """Worst-case asymmetry ``max_x |P(x) - P(-x)|``.

    Raises
    ------
    ValueError
        If the position window is not symmetric about 0 (then P(-x) is not
        defined for every stored x).
    """
    pos = dist.positions
    if not np.array_equal(pos[::-1], -pos):
        raise ValueError(
            "symmetry deviation needs a position window symmetric about 0, "
            f"got [{pos[0]}, {pos[-1]}]"
        )
    return float(np.max(np.abs(dist.probs - dist.probs[::-1])))


@dataclass(frozen=True)
class PhaseDiagram:
    """Peak-gap landscape over a (phi1, phi2) grid at fixed theta and time.

    Attributes
    ----------
    theta : float
        Rotation angle (radians) shared by all grid points.
    time : int
        Step count shared by all grid points.
    phi1_grid, phi2_grid : numpy.ndarray
        The phase grids in radians (rows / columns of ``delta``).
    delta : numpy.ndarray
        ``delta[i, j]`` is the peak gap of the walk at
        ``(theta, phi1_grid[i], phi2_grid[j])``; entries lie in [0, 1].
    """

    theta: float
    time: int
    phi1_grid: np.ndarray = field(repr=False)
    phi2_grid: np.ndarray = field(repr=False)
    delta: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        p1 = np.asarray(self.phi1_grid, dtype=np.float64)
        p2 = np.asarray(self.phi2_grid, dtype=np.float64)
        d = np.asarray(self.delta, dtype=np.float64)
        if d.shape != (p1.size, p2.size):
            raise ValueError(
                f"delta has shape {d.shape}, expected {(p1.size, p2.size)}"
            )
        if d.size and (np.min(d) < 0.0 or np.max(d) > 1.0):
            raise ValueError("delta entries must lie in [0, 1]")
        object.__setattr__(self, "phi1_grid", p1)
        object.__setattr__(self, "phi2_grid", p2)
        object.__setattr__(self, "delta", d)


def theta_sweep(
    thetas: "np.ndarray | list[float]",
    phi1: float,
    phi2: float,
    alpha: complex,
    beta: complex,
    steps: int,
    normalize: bool = True,
) -> list[tuple[float, ProbabilityDistribution]]:
    """Run one walk per rotation angle; distributions in input order.

    An empty angle list yields an empty result.  ``normalize=False`` passes
    the angles to the coin without modular reduction.
    """
    return [
        (
            float(theta),
            run_walk(
                CoinParams(float(theta), phi1, phi2, normalize=normalize), alpha, beta, steps
            ),
        )
        for theta in np.asarray(thetas, dtype=np.float64)
    ]


def phase_diagram(
    theta: float,
    phi1_grid: "np.ndarray | list[float]",
    phi2_grid: "np.ndarray | list[float]",
    alpha: complex,
    beta: complex,
    steps: int,
    normalize: bool = True,
) -> PhaseDiagram:
    """Peak gap of the walk at every point of a (phi1, phi2) grid.

    ``normalize=False`` passes the grid angles to the coin without modular
    reduction (matters for phases of 180 degrees and above).

    Raises
    ------
    ValueError
        If either grid is empty.
    """
    p1 = np.asarray(phi1_grid, dtype=np.float64)
    p2 = np.asarray(phi2_grid, dtype=np.float64)
    if p1.size == 0 or p2.size == 0:
        raise ValueError("phase grids must be non-empty")
    delta = np.empty((p1.size, p2.size), dtype=np.float64)
    for i, phi1 in enumerate(p1):
        for j, phi2 in enumerate(p2):
            params = CoinParams(theta, float(phi1), float(phi2), normalize=normalize)
            delta[i, j] = peak_gap(run_walk(params, alpha, beta, steps))
    return PhaseDiagram(float(theta), steps, p1, p2, delta)
