"""Reference evolution engine: explicit dense operator matrices.

This is the deliberately naive cross-check for the recurrence engine in
:mod:`coinwalk.evolution`.  It builds the one-step operator of the walk as an
explicit ``(4N+2) x (4N+2)`` matrix over the ``2N+1`` position window
``x = -N .. N`` and evolves by repeated matrix-vector products.

Layout of the dense vector: coin block times position, head block first —
entry ``coin * (2N+1) + (x + N)`` holds the amplitude of coin state ``coin``
(0 = head, 1 = tail) at position ``x``.

The shift matrix ``M`` is the cyclic one-step down-shift permutation of the
window (``M[i, j] = 1`` iff ``i = (j+1) mod (2N+1)``); the conditional shift
moves head amplitude right via ``M`` and tail amplitude left via ``M^T``.
The wraparound entries make the operator exactly unitary, and they are never
exercised as long as ``steps <= N`` — which the public entry point enforces —
so the cyclic window agrees exactly with the infinite line.

Being O(N^2) per step in time and O(N^2) in memory, this path is for
validation, not production; it refuses half-widths above 200 unless the cap
is raised explicitly.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .state import ProbabilityDistribution

__all__ = [
    "StepUnitary",
    "build_shift_matrix",
    "build_step_unitary",
    "dense_amplitudes",
    "evolve_dense",
]

#: Default refusal threshold for the dense window half-width.
DENSE_HALF_WIDTH_CAP = 200

_UNITARY_TOL = 1e-10


def _check_half_width(half_width: int) -> int:
    if not isinstance(half_width, (int, np.integer)) or isinstance(half_width, bool):
        raise ValueError(f"half_width must be an integer, got {half_width!r}")
    if half_width < 1:
        raise ValueError(f"half_width must be positive, got {half_width}")
    return int(half_width)


@dataclass(frozen=True)
class StepUnitary:
    """One-step walk operator over a ``2N+1`` position window.

    Attributes
    ----------
    matrix : numpy.ndarray
        Complex ``(4N+2, 4N+2)`` array, verified unitary at construction
        (max-abs deviation of ``U^dagger U`` from identity at most 1e-10).
    window_half_width : int
        The ``N`` of the window.
    """

    matrix: np.ndarray
    window_half_width: int

    def __post_init__(self) -> None:
        n = _check_half_width(self.window_half_width)
        object.__setattr__(self, "window_half_width", n)
        m = np.asarray(self.matrix, dtype=np.complex128)
        dim = 2 * (2 * n + 1)
        if m.shape != (dim, dim):
            raise ValueError(
                f"operator for half_width={n} must have shape {(dim, dim)}, got {m.shape}"
            )
        residual = m.conj().T @ m - np.eye(dim)
        worst = float(np.max(np.abs(residual)))
        if worst > _UNITARY_TOL:
            raise ValueError(
                f"step operator is not unitary: max |U^H U - I| = {worst:.3e} "
                f"exceeds {_UNITARY_TOL:.0e} (is the coin matrix unitary?)"
            )
        object.__setattr__(self, "matrix", m)


def build_shift_matrix(half_width: int) -> np.ndarray:
    """The cyclic down-shift permutation ``M`` of the ``2N+1`` window.

    ``M[i, j] = 1`` iff ``i = (j+1) mod (2N+1)``: applied to a coefficient
    vector it moves every position one site to the right, with the single
    wraparound entry sitting in the top-right corner.

    Raises
    ------
    ValueError
        If ``half_width`` is not a positive integer.
    """
    n = _check_half_width(half_width)
    w = 2 * n + 1
    m = np.zeros((w, w), dtype=np.complex128)
    m[np.arange(1, w), np.arange(w - 1)] = 1.0
    m[0, w - 1] = 1.0
    return m


def build_step_unitary(coin: np.ndarray, half_width: int) -> StepUnitary:
    """Assemble the one-step operator ``U = S (C kron I)`` over the window.

    ``S`` shifts the head block right (``M``) and the tail block left
    (``M^T``); ``C kron I`` applies the coin at every site.

    Raises
    ------
    ValueError
        If ``half_width`` is invalid, or if ``coin`` is not unitary (the
        assembled operator then fails its own unitarity check).
    """
    n = _check_half_width(half_width)
    c = np.asarray(coin, dtype=np.complex128)
    if c.shape != (2, 2):
        raise ValueError(f"coin must be a (2, 2) matrix, got shape {c.shape}")
    w = 2 * n + 1
    m = build_shift_matrix(n)
    shift = np.zeros((2 * w, 2 * w), dtype=np.complex128)
    shift[:w, :w] = m
    shift[w:, w:] = m.T
    step = shift @ np.kron(c, np.eye(w, dtype=np.complex128))
    return StepUnitary(step, n)


def dense_amplitudes(
    alpha: complex,
    beta: complex,
    coin: np.ndarray,
    half_width: int,
    steps: int,
    max_half_width: int = DENSE_HALF_WIDTH_CAP,
) -> np.ndarray:
    """Evolve by repeated dense matrix-vector products; return the amplitude table.

    Parameters
    ----------
    alpha, beta : complex
        Normalized initial coin amplitudes at the origin.
    coin : numpy.ndarray
        The (2, 2) coin matrix.
    half_width : int
        Window half-width ``N``.
    steps : int
        Number of steps; must satisfy ``0 <= steps <= half_width`` so the
        cyclic wraparound never fires.
    max_half_width : int, optional
        Size cap for the dense operator (default 200); raise it explicitly to
        run bigger windows.

    Returns
    -------
    numpy.ndarray
        Complex ``(2, 2N+1)`` array: row 0 head amplitudes, row 1 tail
        amplitudes, columns ordered by position ``-N .. N``.
    """
    n = _check_half_width(half_width)
    if n > max_half_width:
        raise ValueError(
            f"dense engine refuses half_width={n} > {max_half_width}; "
            f"this path is O(N^2) per step and meant for validation runs "
            f"(pass max_half_width explicitly to override)"
        )
    if not 0 <= steps <= n:
        raise ValueError(
            f"dense engine requires 0 <= steps <= half_width so the cyclic "
            f"window never wraps; got steps={steps}, half_width={n}"
        )
    alpha = complex(alpha)
    beta = complex(beta)
    if not (cmath.isfinite(alpha) and cmath.isfinite(beta)):
        raise ValueError(f"coin amplitudes must be finite, got alpha={alpha!r}, beta={beta!r}")
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(
            f"coin state must be normalized: |alpha|^2 + |beta|^2 = {norm!r} "
            f"deviates from 1 by {norm - 1.0:.3e}"
        )
    w = 2 * n + 1
    step = build_step_unitary(coin, n)
    vec = np.zeros(2 * w, dtype=np.complex128)
    vec[n] = alpha  # head block, origin
    vec[w + n] = beta  # tail block, origin
    for _ in range(steps):
        vec = step.matrix @ vec
    return vec.reshape(2, w)


def evolve_dense(
    alpha: complex,
    beta: complex,
    coin: np.ndarray,
    half_width: int,
    steps: int,
    max_half_width: int = DENSE_HALF_WIDTH_CAP,
) -> ProbabilityDistribution:
    """Dense-engine walk, measured: the distribution over positions ``-N .. N``."""
    amp = dense_amplitudes(alpha, beta, coin, half_width, steps, max_half_width)
    probs = np.sum(np.abs(amp) ** 2, axis=0)
    positions = np.arange(-half_width, half_width + 1)
    return ProbabilityDistribution(positions, probs, time=steps)
