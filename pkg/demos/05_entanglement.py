"""How walking entangles the coin with the position register.

The state starts as a product (any initial coin state times the origin
site). Each step correlates the coin with where the walker went, and the
Schmidt spectrum of the coin/position split tracks how strongly. For the
Hadamard coin the entropy shoots toward its long-time plateau within a
few steps; a pure flip coin (theta = 90 deg) started on one side of the
coin never mixes the sectors, so that state bounces between two product
states and the rank stays pinned at 1.
"""

import numpy as np

from coinwalk import (
    UNBIASED_INIT,
    CoinParams,
    LatticeSpec,
    entanglement_entropy,
    evolve,
    initial_state,
    make_coin,
    named_coin,
    schmidt_spectrum,
)


def trace(params, steps, init=UNBIASED_INIT):
    coin = make_coin(params)
    state = initial_state(*init, LatticeSpec(max(steps, 1)))
    rows = []
    for t in range(steps + 1):
        spectrum = schmidt_spectrum(state)
        rows.append((t, spectrum.rank, tuple(spectrum.values), entanglement_entropy(state)))
        if t < steps:
            state = evolve(state, coin, 1)
    return rows


def main():
    print("Hadamard walk, unbiased start:")
    print(f"{'t':>3} {'rank':>4} {'sigma1':>8} {'sigma2':>8} {'entropy':>9}")
    for t, rank, sigmas, entropy in trace(named_coin("hadamard"), 12):
        print(f"{t:3d} {rank:4d} {sigmas[0]:8.5f} {sigmas[1]:8.5f} {entropy:9.6f}")
    print()
    print("One step is already maximally entangling here (entropy = 1 bit);")
    print("afterwards the entropy settles around its asymptotic value ~0.87.")
    print()

    print("flip coin (theta = 90 deg), head start, for contrast:")
    rows = trace(CoinParams(np.pi / 2, 0.0, 0.0), 12, init=(1.0, 0.0))
    ranks = {rank for _, rank, _, _ in rows}
    worst = max(entropy for *_, entropy in rows)
    print(f"  Schmidt rank over 12 steps: always {ranks} -- the state never")
    print(f"  stops being a product; max entropy seen: {worst:.1e}")


if __name__ == "__main__":
    main()
