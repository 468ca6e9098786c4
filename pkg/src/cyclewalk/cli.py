"""Command-line front end.

Subcommands: walk (CSV probability series), period, solve, lyapunov, crypto.
Series go to CSV with LF line endings and 12-significant-digit probabilities;
reports print human-readable by default and JSON with --json. Exit codes:
0 success, 1 usage error or unwritable output, 2 numerical/domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from . import crypto
from .errors import (
    CycleWalkError,
    IndexOutOfRange,
    InvalidMessage,
    InvalidParams,
    InvalidPosition,
    InvalidSize,
    OutOfRange,
)
from .lyapunov import lyapunov_exponent
from .parrondo import aabb_residuals, solve_aabb
from .presets import COIN_PRESETS, coin_preset, instance_coins
from .spectral import sequence_min_period
from .walk import (
    CoinParams,
    CoinSequence,
    WalkerState,
    evolve_sequence,
    site_probability,
)

USAGE_ERROR = 1
DOMAIN_ERROR = 2

# Bad argument values exit 1; genuine numerical/domain failures exit 2.
_USAGE_ERRORS = (
    InvalidParams,
    InvalidSize,
    InvalidMessage,
    InvalidPosition,
    IndexOutOfRange,
    OutOfRange,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract here reserves 2 for
    # numerical errors, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def format_probability(value: float) -> str:
    """12 significant digits, always keeping a decimal point (1 -> "1.0")."""
    text = format(value, ".12g")
    if "." not in text and "e" not in text and "E" not in text:
        text += ".0"
    return text


def _parse_coin_spec(spec: str) -> CoinParams:
    if spec in COIN_PRESETS:
        return coin_preset(spec)
    parts = spec.split(",")
    if len(parts) not in (1, 2, 3):
        raise InvalidParams(f"coin spec {spec!r} is neither a preset nor rho[,alpha[,beta]]")
    try:
        numbers = [float(p) for p in parts]
    except ValueError:
        raise InvalidParams(
            f"coin spec {spec!r} is neither a preset nor rho[,alpha[,beta]]"
        ) from None
    numbers += [0.0] * (3 - len(numbers))
    return CoinParams(*numbers)


def _resolve_sequence(args) -> CoinSequence:
    """Build the coin schedule from --seq/--coin or --rho/--alpha/--beta."""
    overrides = {}
    for item in args.coin or []:
        letter, _, spec = item.partition("=")
        if not letter or not spec:
            raise InvalidParams(f"--coin expects LETTER=SPEC, got {item!r}")
        overrides[letter] = _parse_coin_spec(spec)

    if args.seq is None:
        if args.rho is None:
            raise InvalidParams("give either --seq or --rho")
        return CoinSequence.single(CoinParams(args.rho, args.alpha, args.beta))
    if args.rho is not None:
        raise InvalidParams("--seq and --rho are mutually exclusive")

    if args.seq in COIN_PRESETS:
        return CoinSequence.single(coin_preset(args.seq))
    coins = {}
    for letter in sorted(set(args.seq)):
        if letter in overrides:
            coins[letter] = overrides[letter]
        else:
            try:
                coins[letter] = instance_coins(args.k)[letter]
            except (InvalidParams, KeyError):
                raise InvalidParams(
                    f"no coin defined for letter {letter!r}; add --coin "
                    f"{letter}=RHO[,ALPHA,BETA] or use a preset name"
                ) from None
    return CoinSequence(coins, args.seq)


def _default_stride(seq: CoinSequence, k: int) -> int:
    if len(seq.pattern) == 1 and k % 2 == 0:
        return 2
    if len(seq.pattern) == 4:
        return 4
    return 1


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _cmd_walk(args) -> int:
    seq = _resolve_sequence(args)
    stride = args.stride if args.stride is not None else _default_stride(seq, args.k)
    if stride < 1:
        raise InvalidParams(f"stride must be >= 1, got {stride}")
    initial = WalkerState.basis(args.k, 0, 1)
    trajectory = evolve_sequence(initial, seq, args.steps)
    lines = []
    if args.full_dist:
        lines.append("step,site,probability")
        for t in range(0, args.steps + 1, stride):
            for site in range(args.k):
                p = site_probability(trajectory[t], site)
                lines.append(f"{t},{site},{format_probability(p)}")
    else:
        lines.append("step,probability")
        for t in range(0, args.steps + 1, stride):
            p = site_probability(trajectory[t], 0)
            lines.append(f"{t},{format_probability(p)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_period(args) -> int:
    seq = _resolve_sequence(args)
    report = sequence_min_period(seq, args.k, n_max=args.nmax, tol=args.tol)
    payload = {"k": args.k, "pattern": seq.pattern, **report.to_dict()}
    if args.json:
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif report.is_periodic:
        _emit(
            f"periodic: period {report.period} coin steps "
            f"(method {report.method}, tol {report.tolerance})\n",
            args.out,
        )
    else:
        _emit(f"chaotic: no period up to {report.n_max} coin steps\n", args.out)
    return 0


def _cmd_solve(args) -> int:
    plus, minus = solve_aabb(args.rho)
    if args.json:
        payload = {
            "rho": args.rho,
            "branches": [
                {**asdict(sol), "residuals": list(aabb_residuals(sol.rho1, sol.rho2, sol.rho))}
                for sol in (plus, minus)
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = []
    for sol in (plus, minus):
        residuals = aabb_residuals(sol.rho1, sol.rho2, sol.rho)
        lines.append(
            f"branch {sol.branch}: rho1={sol.rho1:.6f} rho2={sol.rho2:.6f}"
            f"{' (degenerate)' if sol.degenerate else ''}"
            f"  max residual {residuals.worst:.3e}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_lyapunov(args) -> int:
    seq = _resolve_sequence(args)
    initial = WalkerState.basis(args.k, 0, 1)
    report = lyapunov_exponent(seq, initial, t0=args.t0, t=args.steps)
    if args.json:
        _emit(json.dumps(asdict(report), indent=2) + "\n", args.out)
    else:
        _emit(
            f"{report.label}: exponent {report.exponent:.6f} bits/step over "
            f"steps {report.t0}..{report.t} (distance {report.distance:.6f})\n",
            args.out,
        )
    return 0


def _cmd_crypto(args) -> int:
    cfg = crypto.ProtocolConfig.for_cycle(args.k)
    pk = crypto.gen_public_key(args.l, args.s, cfg)
    ciphertext = crypto.encrypt(pk, args.m)
    plain = crypto.decrypt(ciphertext, cfg)
    measured = crypto.measure_position(plain)
    recovered = crypto.recover_message(measured, args.l, args.k)
    if args.json:
        payload = {
            "k": args.k,
            "message": args.m,
            "position": args.l,
            "coin_state": args.s,
            "measured_site": measured,
            "recovered": recovered,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0 if recovered == args.m else DOMAIN_ERROR
    lines = [
        f"public key: {pk.generator} applied to |{args.l}>|{args.s}> on a {args.k}-cycle",
        f"encrypt: message {args.m} encoded by position rotation",
        f"decrypt: measured site {measured}",
        f"recovered message: {recovered}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if recovered == args.m else DOMAIN_ERROR


def _add_common(parser: argparse.ArgumentParser, *, with_seq: bool = True) -> None:
    parser.add_argument("--k", type=int, default=3, help="cycle size (default 3)")
    parser.add_argument("--out", help="output file (default stdout)")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    if with_seq:
        parser.add_argument(
            "--seq",
            help="coin pattern, e.g. AABB (letters A/B/C/H resolve to the "
            "built-in coins for --k) or a preset name like hadamard",
        )
        parser.add_argument("--rho", type=float, help="single-coin rho (alternative to --seq)")
        parser.add_argument("--alpha", type=float, default=0.0, help="single-coin alpha (radians)")
        parser.add_argument("--beta", type=float, default=0.0, help="single-coin beta (radians)")
        parser.add_argument(
            "--coin",
            action="append",
            metavar="LETTER=SPEC",
            help="override a pattern letter with a preset name or rho[,alpha[,beta]]",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cyclewalk",
        description="Quantum walks on k-cycle graphs: series, periodicity, "
        "chaos-combining schedules, Lyapunov exponents, encryption demo.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_walk = sub.add_parser("walk", help="emit a return-probability CSV series")
    _add_common(p_walk)
    p_walk.add_argument("--steps", type=int, default=40, help="number of coin steps")
    p_walk.add_argument("--stride", type=int, help="record every stride-th step")
    p_walk.add_argument(
        "--full-dist",
        action="store_true",
        help="emit the whole per-site distribution instead of site 0 only",
    )
    p_walk.set_defaults(handler=_cmd_walk)

    p_period = sub.add_parser("period", help="minimal period or chaotic verdict")
    _add_common(p_period)
    p_period.add_argument("--nmax", type=int, default=1000, help="search cap in coin steps")
    p_period.add_argument("--tol", type=float, default=1e-9, help="identity tolerance")
    p_period.set_defaults(handler=_cmd_period)

    p_solve = sub.add_parser("solve", help="solve the AABB matching system for rho")
    _add_common(p_solve, with_seq=False)
    p_solve.add_argument("--rho", type=float, required=True, help="reference coin rho")
    p_solve.set_defaults(handler=_cmd_solve)

    p_lyap = sub.add_parser("lyapunov", help="overlap exponent of a schedule")
    _add_common(p_lyap)
    p_lyap.add_argument("--steps", type=int, default=20, help="end step t")
    p_lyap.add_argument("--t0", type=int, default=0, help="start step (default 0)")
    p_lyap.set_defaults(handler=_cmd_lyapunov)

    p_crypto = sub.add_parser("crypto", help="run the encryption round trip")
    _add_common(p_crypto, with_seq=False)
    p_crypto.add_argument("--m", type=int, required=True, help="message in 0..k-1")
    p_crypto.add_argument("--l", type=int, required=True, help="secret start position")
    p_crypto.add_argument("--s", type=int, default=1, help="coin basis state 0 or 1")
    p_crypto.set_defaults(handler=_cmd_crypto)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"cyclewalk: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except CycleWalkError as exc:
        print(f"cyclewalk: error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except OSError as exc:
        print(f"cyclewalk: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
