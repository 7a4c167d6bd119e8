"""Command-line front end: run walks and sweeps, emit CSV or JSON.

Subcommands
-----------
walk
    One walk; rows ``position,probability`` over the ``2N+1`` reachable sites.
sweep-theta
    One walk per rotation angle of a degree grid; rows
    ``theta_deg,position,probability``.
phase-diagram
    Peak gap over a (phi1, phi2) degree grid; rows ``phi1_deg,phi2_deg,delta``
    in row-major grid order.
entanglement
    Schmidt rank and coin-position entropy after each step; rows
    ``t,schmidt_rank,entropy``.
verify
    Run the recurrence and dense engines side by side and report the largest
    amplitude discrepancy per step; exits 1 if any step disagrees by more
    than 1e-12.

Conventions shared by all subcommands: angles are entered in degrees,
output is deterministic (no timestamps, fixed ordering), floats carry
17 significant digits so parsing them back reproduces the doubles
bit-for-bit, text is UTF-8 with LF line endings.  Exit codes: 0 success,
1 numeric failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import numpy as np

from .analysis import phase_diagram
from .coin import CoinParams, NAMED_COINS, make_coin, named_coin
from .dense import dense_amplitudes
from .entanglement import entanglement_entropy, schmidt_spectrum
from .evolution import run_walk, step_recurrence
from .state import UNBIASED_INIT, LatticeSpec, initial_state

__all__ = ["main"]

VERIFY_TOL = 1e-12
VERIFY_MAX_STEPS = 200

#: Named initial coin states selectable with --init.
NAMED_INITS: dict[str, tuple[complex, complex]] = {
    "unbiased": UNBIASED_INIT,
    "head": (1.0 + 0.0j, 0.0j),
    "tail": (0.0j, 1.0 + 0.0j),
}


class _UsageError(Exception):
    """Invalid flag combination or value; reported on stderr, exit code 2."""


def _fmt(value: float) -> str:
    """Format a float with 17 significant digits (lossless double round-trip)."""
    return format(float(value), ".17g")


def _parse_grid(text: str, flag: str) -> np.ndarray:
    """Parse a ``start:stop:step`` degree grid with an inclusive stop."""
    parts = text.split(":")
    if len(parts) != 3:
        raise _UsageError(f"{flag} expects start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise _UsageError(f"{flag} expects numeric start:stop:step, got {text!r}") from None
    if not all(math.isfinite(v) for v in (start, stop, step)):
        raise _UsageError(f"{flag} values must be finite, got {text!r}")
    if step <= 0.0:
        raise _UsageError(f"{flag} step must be positive, got {step}")
    if stop < start:
        raise _UsageError(f"{flag} stop must be >= start, got {text!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def _coin_params(args: argparse.Namespace) -> tuple[CoinParams, tuple[float, float, float]]:
    """Resolve --coin / --theta-deg flags to CoinParams plus the degree triple."""
    explicit = [
        flag
        for flag, value in (
            ("--theta-deg", args.theta_deg),
            ("--phi1-deg", args.phi1_deg),
            ("--phi2-deg", args.phi2_deg),
        )
        if value is not None
    ]
    if args.coin is not None and explicit:
        raise _UsageError(f"--coin conflicts with {explicit[0]}; give one or the other")
    if args.coin is not None:
        params = named_coin(args.coin)
        degrees = (
            math.degrees(params.theta),
            math.degrees(params.phi1),
            math.degrees(params.phi2),
        )
        return params, degrees
    if args.theta_deg is None:
        raise _UsageError("choose a coin: --coin NAME or --theta-deg (with optional --phi1-deg/--phi2-deg)")
    degrees = (args.theta_deg, args.phi1_deg or 0.0, args.phi2_deg or 0.0)
    try:
        params = CoinParams.from_degrees(*degrees, normalize=not args.no_normalize_angles)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return params, degrees


def _init_amplitudes(args: argparse.Namespace) -> tuple[complex, complex]:
    """Resolve --init / component flags to the initial (alpha, beta) pair."""
    components = [
        flag
        for flag, value in (
            ("--alpha-re", args.alpha_re),
            ("--alpha-im", args.alpha_im),
            ("--beta-re", args.beta_re),
            ("--beta-im", args.beta_im),
        )
        if value is not None
    ]
    if args.init is not None and components:
        raise _UsageError(f"--init conflicts with {components[0]}; give one or the other")
    if components:
        alpha = complex(args.alpha_re or 0.0, args.alpha_im or 0.0)
        beta = complex(args.beta_re or 0.0, args.beta_im or 0.0)
        norm = abs(alpha) ** 2 + abs(beta) ** 2
        if abs(norm - 1.0) > 1e-10:
            raise _UsageError(
                f"custom initial state must be normalized within 1e-10: "
                f"|alpha|^2 + |beta|^2 = {norm!r}"
            )
        return alpha, beta
    return NAMED_INITS[args.init or "unbiased"]


def _require_steps(args: argparse.Namespace, minimum: int = 1) -> int:
    if args.steps < minimum:
        raise _UsageError(f"--steps must be at least {minimum}, got {args.steps}")
    return args.steps


def _write_lines(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _write_json(payload: object, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _window(dist) -> tuple[np.ndarray, np.ndarray]:
    """Strip the two guard sites: the 2N+1 reachable positions and their probabilities."""
    return dist.positions[1:-1], dist.probs[1:-1]


def _walk_payload(degrees: tuple[float, float, float], steps: int, dist) -> dict:
    positions, probs = _window(dist)
    return {
        "theta_deg": degrees[0],
        "phi1_deg": degrees[1],
        "phi2_deg": degrees[2],
        "steps": steps,
        "positions": [int(x) for x in positions],
        "probs": [float(p) for p in probs],
    }


# ------------------------------------------------------------------
# Subcommands
# ------------------------------------------------------------------


def cmd_walk(args: argparse.Namespace) -> int:
    steps = _require_steps(args)
    params, degrees = _coin_params(args)
    alpha, beta = _init_amplitudes(args)
    dist = run_walk(params, alpha, beta, steps)
    if args.format == "json":
        _write_json(_walk_payload(degrees, steps, dist), args.out)
    else:
        positions, probs = _window(dist)
        lines = ["position,probability"]
        lines += [f"{x},{_fmt(p)}" for x, p in zip(positions, probs)]
        _write_lines(lines, args.out)
    return 0


def cmd_sweep_theta(args: argparse.Namespace) -> int:
    steps = _require_steps(args)
    alpha, beta = _init_amplitudes(args)
    thetas_deg = _parse_grid(args.theta_grid, "--theta-grid")
    phi1_deg = args.phi1_deg or 0.0
    phi2_deg = args.phi2_deg or 0.0
    normalize = not args.no_normalize_angles
    results = []
    for theta_deg in thetas_deg:
        try:
            params = CoinParams.from_degrees(theta_deg, phi1_deg, phi2_deg, normalize=normalize)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        results.append((float(theta_deg), run_walk(params, alpha, beta, steps)))
    if args.format == "json":
        payload = [
            _walk_payload((theta_deg, phi1_deg, phi2_deg), steps, dist)
            for theta_deg, dist in results
        ]
        _write_json(payload, args.out)
    else:
        lines = ["theta_deg,position,probability"]
        for theta_deg, dist in results:
            positions, probs = _window(dist)
            lines += [f"{_fmt(theta_deg)},{x},{_fmt(p)}" for x, p in zip(positions, probs)]
        _write_lines(lines, args.out)
    return 0


def cmd_phase_diagram(args: argparse.Namespace) -> int:
    steps = _require_steps(args)
    params, degrees = _coin_params(args)
    alpha, beta = _init_amplitudes(args)
    phi1_deg = _parse_grid(args.phi1_grid, "--phi1-grid")
    phi2_deg = _parse_grid(args.phi2_grid, "--phi2-grid")
    diagram = phase_diagram(
        params.theta,
        np.radians(phi1_deg),
        np.radians(phi2_deg),
        alpha,
        beta,
        steps,
        normalize=not args.no_normalize_angles,
    )
    if args.format == "json":
        payload = {
            "theta_deg": degrees[0],
            "steps": steps,
            "phi1_deg": [float(v) for v in phi1_deg],
            "phi2_deg": [float(v) for v in phi2_deg],
            "delta": [[float(d) for d in row] for row in diagram.delta],
        }
        _write_json(payload, args.out)
    else:
        lines = ["phi1_deg,phi2_deg,delta"]
        for i, p1 in enumerate(phi1_deg):
            for j, p2 in enumerate(phi2_deg):
                lines.append(f"{_fmt(p1)},{_fmt(p2)},{_fmt(diagram.delta[i, j])}")
        _write_lines(lines, args.out)
    return 0


def cmd_entanglement(args: argparse.Namespace) -> int:
    steps = _require_steps(args, minimum=0)
    params, degrees = _coin_params(args)
    alpha, beta = _init_amplitudes(args)
    coin = make_coin(params)
    state = initial_state(alpha, beta, LatticeSpec(max(steps, 1)))
    rows: list[tuple[int, int, float]] = []
    for t in range(steps + 1):
        if t > 0:
            state = step_recurrence(state, coin)
        spectrum = schmidt_spectrum(state)
        rows.append((t, spectrum.rank, entanglement_entropy(state)))
    if args.format == "json":
        payload = {
            "theta_deg": degrees[0],
            "phi1_deg": degrees[1],
            "phi2_deg": degrees[2],
            "steps": steps,
            "t": [t for t, _, _ in rows],
            "schmidt_rank": [rank for _, rank, _ in rows],
            "entropy": [float(entropy) for _, _, entropy in rows],
        }
        _write_json(payload, args.out)
    else:
        lines = ["t,schmidt_rank,entropy"]
        lines += [f"{t},{rank},{_fmt(entropy)}" for t, rank, entropy in rows]
        _write_lines(lines, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    steps = args.max_steps
    if steps < 1:
        raise _UsageError(f"--max-steps must be at least 1, got {steps}")
    if steps > VERIFY_MAX_STEPS:
        raise _UsageError(
            f"--max-steps is capped at {VERIFY_MAX_STEPS} (dense reference engine), got {steps}"
        )
    params, _ = _coin_params(args)
    alpha, beta = _init_amplitudes(args)
    coin = make_coin(params)
    dense_coin = coin.copy()
    if args.corrupt_coin:
        # Fault-injection hook: small enough to slip past the step-operator
        # unitarity guard (1e-10), large enough to trip the 1e-12 comparison.
        dense_coin[0, 0] += 3e-11
    state = initial_state(alpha, beta, LatticeSpec(steps))
    gaps: list[float] = []
    worst: tuple[float, int, int] | None = None  # (discrepancy, t, x)
    for t in range(1, steps + 1):
        state = step_recurrence(state, coin)
        reference = dense_amplitudes(alpha, beta, dense_coin, steps, t)
        diff = np.abs(state.amplitudes[:, 1:-1] - reference)
        gap = float(np.max(diff))
        gaps.append(gap)
        if gap > VERIFY_TOL and (worst is None or gap > worst[0]):
            x = int(np.argmax(np.max(diff, axis=0))) - steps
            worst = (gap, t, x)
    if args.format == "json":
        payload = {
            "tolerance": VERIFY_TOL,
            "ok": worst is None,
            "t": list(range(1, steps + 1)),
            "max_abs_discrepancy": gaps,
        }
        _write_json(payload, args.out)
    else:
        lines = ["t,max_abs_discrepancy"]
        lines += [f"{t},{_fmt(gap)}" for t, gap in enumerate(gaps, start=1)]
        _write_lines(lines, args.out)
    if worst is not None:
        gap, t, x = worst
        print(
            f"verify: engines disagree by {gap:.3e} (> {VERIFY_TOL:.0e}) "
            f"at t={t}, position x={x}",
            file=sys.stderr,
        )
        return 1
    return 0


# ------------------------------------------------------------------
# Parser wiring
# ------------------------------------------------------------------


def _add_coin_flags(parser: argparse.ArgumentParser, with_named: bool = True) -> None:
    if with_named:
        parser.add_argument(
            "--coin",
            choices=sorted(NAMED_COINS),
            help="named coin (conflicts with the explicit angle flags)",
        )
    parser.add_argument("--theta-deg", type=float, help="rotation angle in degrees")
    parser.add_argument("--phi1-deg", type=float, help="first phase angle in degrees (default 0)")
    parser.add_argument("--phi2-deg", type=float, help="second phase angle in degrees (default 0)")
    parser.add_argument(
        "--no-normalize-angles",
        action="store_true",
        help="use the angles exactly as given instead of reducing theta into "
        "[0,360) and the phases into [0,180)",
    )


def _add_init_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--init",
        choices=sorted(NAMED_INITS),
        help="named initial coin state (default: unbiased = (|H> - i|T>)/sqrt(2))",
    )
    for flag, doc in (
        ("--alpha-re", "Re of the head amplitude"),
        ("--alpha-im", "Im of the head amplitude"),
        ("--beta-re", "Re of the tail amplitude"),
        ("--beta-im", "Im of the tail amplitude"),
    ):
        parser.add_argument(flag, type=float, help=f"custom initial state: {doc}")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    parser.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinwalk",
        description="Discrete-time quantum walk on a line with a general three-parameter coin.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    walk = sub.add_parser("walk", help="run one walk, emit position,probability")
    _add_coin_flags(walk)
    _add_init_flags(walk)
    walk.add_argument("--steps", type=int, required=True, help="number of steps (>= 1)")
    _add_output_flags(walk)
    walk.set_defaults(handler=cmd_walk)

    sweep = sub.add_parser("sweep-theta", help="one walk per rotation angle of a grid")
    sweep.add_argument(
        "--theta-grid",
        default="0:315:45",
        metavar="START:STOP:STEP",
        help="rotation-angle grid in degrees, stop inclusive (default 0:315:45)",
    )
    sweep.add_argument("--phi1-deg", type=float, help="first phase angle in degrees (default 0)")
    sweep.add_argument("--phi2-deg", type=float, help="second phase angle in degrees (default 0)")
    sweep.add_argument(
        "--no-normalize-angles",
        action="store_true",
        help="use the angles exactly as given",
    )
    _add_init_flags(sweep)
    sweep.add_argument("--steps", type=int, required=True, help="number of steps (>= 1)")
    _add_output_flags(sweep)
    sweep.set_defaults(handler=cmd_sweep_theta)

    phase = sub.add_parser("phase-diagram", help="peak gap over a (phi1, phi2) grid")
    _add_coin_flags(phase)
    _add_init_flags(phase)
    phase.add_argument("--steps", type=int, required=True, help="number of steps (>= 1)")
    phase.add_argument(
        "--phi1-grid",
        default="0:150:30",
        metavar="START:STOP:STEP",
        help="phi1 grid in degrees, stop inclusive (default 0:150:30)",
    )
    phase.add_argument(
        "--phi2-grid",
        default="0:150:30",
        metavar="START:STOP:STEP",
        help="phi2 grid in degrees, stop inclusive (default 0:150:30)",
    )
    _add_output_flags(phase)
    phase.set_defaults(handler=cmd_phase_diagram)

    ent = sub.add_parser("entanglement", help="Schmidt rank and entropy after each step")
    _add_coin_flags(ent)
    _add_init_flags(ent)
    ent.add_argument("--steps", type=int, required=True, help="number of steps (>= 0)")
    _add_output_flags(ent)
    ent.set_defaults(handler=cmd_entanglement)

    verify = sub.add_parser(
        "verify", help="cross-check the recurrence engine against the dense operator"
    )
    _add_coin_flags(verify)
    _add_init_flags(verify)
    verify.add_argument(
        "--max-steps",
        type=int,
        default=30,
        help=f"compare the engines after each of this many steps (1..{VERIFY_MAX_STEPS})",
    )
    verify.add_argument("--corrupt-coin", action="store_true", help=argparse.SUPPRESS)
    _add_output_flags(verify)
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its codes.
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
