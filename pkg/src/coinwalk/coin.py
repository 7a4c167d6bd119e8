"""Coin operators for the one-dimensional discrete-time quantum walk.

The internal coin space is spanned by the two classical outcomes |H> (head)
and |T> (tail); matrices act on column vectors (a_H, a_T)^T, so row/column
index 0 is the head component and index 1 is the tail component.

The general coin is a three-parameter unitary

    C(theta, phi1, phi2) = [[ cos(theta),              e^{i phi1} sin(theta) ],
                            [ e^{i phi2} sin(theta),  -e^{i (phi1+phi2)} cos(theta) ]]

with the rotation angle ``theta`` taken in [0, 2*pi) and the two phase
angles ``phi1``, ``phi2`` in [0, pi).  All angles are in radians; degree
conversion is a concern of the command-line layer only.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass

import numpy as np

__all__ = [
    "CoinParams",
    "NAMED_COINS",
    "make_coin",
    "named_coin",
    "check_unitary",
]

_TWO_PI = 2.0 * math.pi

def _wrap(value: float, modulus: float) -> float:
    """Reduce into [0, modulus); float ``%`` of a tiny negative can land on the modulus."""
    reduced = value % modulus
    return 0.0 if reduced == modulus else reduced


#: Parameter triples (theta, phi1, phi2) of the coins referred to by name.
NAMED_COINS: dict[str, tuple[float, float, float]] = {
    "hadamard": (math.pi / 4.0, 0.0, 0.0),
    "grover": (math.pi / 2.0, 0.0, 0.0),
    "fourier": (math.pi / 4.0, math.pi / 2.0, math.pi / 2.0),
}


@dataclass(frozen=True)
class CoinParams:
    """Angle triple defining a coin operator.

    Parameters
    ----------
    theta : float
        Rotation angle in radians.  Normalized into [0, 2*pi) unless
        ``normalize=False``.
    phi1, phi2 : float
        Phase angles in radians.  Normalized into [0, pi) unless
        ``normalize=False``.
    normalize : bool, optional
        When True (default) the angles are reduced modulo their canonical
        ranges at construction.  Raw mode keeps them as given, which matters
        for phases in [pi, 2*pi): those produce coins that are not equal to
        any coin with phases in the canonical range.

    Raises
    ------
    ValueError
        If any angle is NaN or infinite.
    """

    theta: float
    phi1: float
    phi2: float
    normalize: InitVar[bool] = True

    def __post_init__(self, normalize: bool) -> None:
        for name in ("theta", "phi1", "phi2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"coin angle {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if normalize:
            object.__setattr__(self, "theta", _wrap(self.theta, _TWO_PI))
            object.__setattr__(self, "phi1", _wrap(self.phi1, math.pi))
            object.__setattr__(self, "phi2", _wrap(self.phi2, math.pi))

    @classmethod
    def from_degrees(
        cls,
        theta_deg: float,
        phi1_deg: float = 0.0,
        phi2_deg: float = 0.0,
        normalize: bool = True,
    ) -> "CoinParams":
        """Build a parameter triple from angles given in degrees."""
        return cls(
            math.radians(theta_deg),
            math.radians(phi1_deg),
            math.radians(phi2_deg),
            normalize=normalize,
        )


def make_coin(params: CoinParams) -> np.ndarray:
    """Return the 2x2 complex coin matrix for an angle triple.

    Parameters
    ----------
    params : CoinParams
        The angle triple (finite by construction).

    Returns
    -------
    numpy.ndarray
        Complex (2, 2) array, unitary to machine precision, with entries

        ``[[cos(theta), e^{i phi1} sin(theta)],
           [e^{i phi2} sin(theta), -e^{i (phi1+phi2)} cos(theta)]]``.
    """
    c = math.cos(params.theta)
    s = math.sin(params.theta)
    return np.array(
        [
            [c, np.exp(1j * params.phi1) * s],
            [np.exp(1j * params.phi2) * s, -np.exp(1j * (params.phi1 + params.phi2)) * c],
        ],
        dtype=np.complex128,
    )


def named_coin(name: str) -> CoinParams:
    """Look up the angle triple of a coin referred to by name.

    Parameters
    ----------
    name : str
        One of ``"hadamard"`` (theta=45deg), ``"grover"`` (theta=90deg) or
        ``"fourier"`` (theta=45deg, phi1=phi2=90deg).  Case-insensitive.

    Raises
    ------
    ValueError
        If the name is unknown; the message lists the valid options.
    """
    key = name.lower()
    if key not in NAMED_COINS:
        options = ", ".join(sorted(NAMED_COINS))
        raise ValueError(f"unknown coin name {name!r}; valid names are: {options}")
    return CoinParams(*NAMED_COINS[key])


def check_unitary(matrix: np.ndarray, tol: float = 1e-12) -> bool:
    """Check whether a 2x2 matrix is unitary within an absolute tolerance.

    Parameters
    ----------
    matrix : array_like
        A (2, 2) complex matrix.
    tol : float, optional
        Maximum allowed absolute deviation of any entry of ``M^dagger M``
        from the identity.

    Returns
    -------
    bool
        True iff ``max(|M^dagger M - I|) <= tol``.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a (2, 2) matrix, got shape {m.shape}")
    residual = m.conj().T @ m - np.eye(2)
    return bool(np.max(np.abs(residual)) <= tol)
