"""Shared test helpers: random parameter draws and hypothesis strategies."""

import math

import numpy as np
from hypothesis import strategies as st

# Finite angles well beyond the canonical ranges, so modular normalization
# gets exercised too.  Radians.
angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


def normalized_pair(rng: np.random.Generator) -> tuple[complex, complex]:
    """Draw a uniformly random normalized coin state (alpha, beta)."""
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return complex(v[0], v[1]), complex(v[2], v[3])


def random_coin_angles(rng: np.random.Generator) -> tuple[float, float, float]:
    """Draw (theta, phi1, phi2) uniformly from the canonical ranges."""
    return (
        float(rng.uniform(0.0, 2.0 * math.pi)),
        float(rng.uniform(0.0, math.pi)),
        float(rng.uniform(0.0, math.pi)),
    )
