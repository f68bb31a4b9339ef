"""Command line interface: one-shot queries writing deterministic reports.

Exit codes: 0 for success (and for verification reports that pass), 1 for a
mathematical failure (a verification report whose conditions do not all
hold), 2 for usage errors. Reports go to stdout unless ``--out`` names a
file; ``plot`` always needs a file (``--out`` or the CANTORVIS_OUT_DIR
environment variable supplying a directory for a generated name).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .cantor import (
    SOFT_RANK_CEILING,
    CantorParams,
    gap_list,
    level_set,
    prime_level_set,
    squared_level_set,
)
from .intervals import Interval
from .quotient import (
    classify_slope,
    pairwise_ratio_cover,
    quotient_outer_cover,
)
from .reports import (
    certificate_csv,
    certificate_payload,
    envelope,
    gap_list_csv,
    gap_list_payload,
    interval_set_csv,
    level_set_payload,
    quotient_cover_payload,
    rational_str,
    squared_level_set_payload,
    to_json,
    verification_csv,
    verification_payload,
    window_cover_payload,
)
from .svg import emit_svg
from .verify import (
    sweep_merge,
    threshold_tests,
    verify_closed_interval_conditions,
    verify_non_self_similarity,
)

J_MAX_CEILING = 8
ENV_OUT_DIR = "CANTORVIS_OUT_DIR"

_VERIFY_CHECKS = ("merge", "squared-gaps", "closed-interval")


class UsageError(Exception):
    """Bad request data; maps to exit code 2."""


@dataclass(frozen=True)
class CommandRequest:
    """One parsed CLI invocation; field defaults match the parser's."""

    command: str
    ratio: Fraction
    check: Optional[str] = None
    variant: str = "full"
    family: str = "level"
    rank: Optional[int] = None
    step: Optional[int] = None
    j_max: Optional[int] = None
    n_max: Optional[int] = None
    grid: Optional[int] = None
    max_rank: Optional[int] = None
    slope: Optional[Fraction] = None
    window: Optional[tuple[Fraction, Fraction]] = None
    output: str = "json"
    out_path: Optional[str] = None
    force: bool = False


def _parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise UsageError(f"cannot parse {name} {text!r} as p/q or a finite decimal") from err


def _parse_ratio(text: str) -> Fraction:
    value = _parse_rational(text, "--lambda")
    if not (0 < value < Fraction(1, 2)):
        raise UsageError(f"--lambda must satisfy 0 < lambda < 1/2, got {text}")
    return value


def _check_ceiling(value: Optional[int], name: str, ceiling: int, force: bool) -> None:
    if value is not None and value > ceiling and not force:
        raise UsageError(
            f"{name} {value} exceeds the soft ceiling {ceiling}; pass --force to override"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cantorvis",
        description="Exact level sets, quotient covers and visibility certificates "
        "for middle Cantor sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, outputs=("json", "csv")) -> None:
        p.add_argument("--lambda", dest="ratio", required=True, metavar="P/Q",
                       help="contraction ratio in (0, 1/2); p/q or finite decimal")
        p.add_argument("--output", choices=outputs, default=outputs[0])
        p.add_argument("--out", dest="out_path", default=None, metavar="PATH",
                       help="write the report here instead of stdout")
        p.add_argument("--force", action="store_true",
                       help="allow ranks past the soft ceiling")

    p = sub.add_parser("level", help="basic intervals at a rank")
    add_common(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--variant", choices=("full", "prime"), default="full")

    p = sub.add_parser("gaps", help="open gaps removed at a step")
    add_common(p)
    p.add_argument("--step", type=int, required=True)

    p = sub.add_parser("square", help="squared level set at a rank")
    add_common(p)
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("quotient", help="quotient cover at a rank")
    add_common(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--window", nargs=2, default=None, metavar=("LO", "HI"),
                   help="clip the cover to [LO, HI] (both positive rationals); "
                   "omit for the prime-by-prime cover")

    p = sub.add_parser("visible", help="classify one slope")
    add_common(p)
    p.add_argument("--k", dest="slope", required=True, metavar="P/Q",
                   help="slope to classify (non-negative rational)")
    p.add_argument("--max-rank", type=int, default=10)

    p = sub.add_parser("verify", help="run one verification family")
    p.add_argument("check", choices=_VERIFY_CHECKS)
    add_common(p)
    p.add_argument("--j-max", type=int, default=5, help="merge sweep depth")
    p.add_argument("--n-max", type=int, default=20, help="squared-gaps depth")
    p.add_argument("--grid", type=int, default=50, help="closed-interval lattice size")

    p = sub.add_parser("thresholds", help="place lambda against the hypothesis gates")
    add_common(p)

    p = sub.add_parser("plot", help="SVG band diagram of level sets")
    add_common(p, outputs=("svg",))
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--family", choices=("level", "prime", "squared"), default="level")

    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    ratio = _parse_ratio(args.ratio)
    slope = None
    if getattr(args, "slope", None) is not None:
        slope = _parse_rational(args.slope, "--k")
        if slope < 0:
            raise UsageError("--k must be non-negative")
    window = None
    if getattr(args, "window", None) is not None:
        lo = _parse_rational(args.window[0], "--window LO")
        hi = _parse_rational(args.window[1], "--window HI")
        if lo <= 0:
            raise UsageError("window touches zero; both ends must be positive")
        if lo > hi:
            raise UsageError("window LO must not exceed HI")
        window = (lo, hi)
    force = getattr(args, "force", False)
    _check_ceiling(getattr(args, "rank", None), "--rank", SOFT_RANK_CEILING, force)
    _check_ceiling(getattr(args, "max_rank", None), "--max-rank", SOFT_RANK_CEILING, force)
    _check_ceiling(getattr(args, "j_max", None), "--j-max", J_MAX_CEILING, force)
    for name in ("rank", "step", "j_max", "n_max", "grid", "max_rank"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    check = getattr(args, "check", None)
    # a verify request carries only the depth parameter its check uses
    j_max = getattr(args, "j_max", None) if check == "merge" else None
    n_max = getattr(args, "n_max", None) if check == "squared-gaps" else None
    grid = getattr(args, "grid", None) if check == "closed-interval" else None
    return CommandRequest(
        command=args.command,
        ratio=ratio,
        check=check,
        variant=getattr(args, "variant", "full"),
        family=getattr(args, "family", "level"),
        rank=getattr(args, "rank", None),
        step=getattr(args, "step", None),
        j_max=j_max,
        n_max=n_max,
        grid=grid,
        max_rank=getattr(args, "max_rank", None),
        slope=slope,
        window=window,
        output=getattr(args, "output", "json"),
        out_path=getattr(args, "out_path", None),
        force=force,
    )


def _request_echo(request: CommandRequest) -> dict:
    echo: dict = {"command": request.command}
    if request.check is not None:
        echo["check"] = request.check
    echo["lambda"] = rational_str(request.ratio)
    if request.command == "level":
        echo["variant"] = request.variant
    if request.command == "plot":
        echo["family"] = request.family
    for key in ("rank", "step", "j_max", "n_max", "grid", "max_rank"):
        value = getattr(request, key)
        if value is not None:
            echo[key] = value
    if request.slope is not None:
        echo["k"] = rational_str(request.slope)
    if request.window is not None:
        echo["window_lo"] = rational_str(request.window[0])
        echo["window_hi"] = rational_str(request.window[1])
    # the destination path is deliberately not echoed: identical queries
    # must render identical bytes wherever they are written
    echo["output"] = request.output
    return echo


def _write(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8")


def _plot_out_path(request: CommandRequest) -> Path:
    if request.out_path is not None:
        return Path(request.out_path)
    env_dir = os.environ.get(ENV_OUT_DIR)
    if env_dir is None:
        raise UsageError(
            f"plot needs --out PATH or the {ENV_OUT_DIR} environment variable"
        )
    ratio_tag = rational_str(request.ratio).replace("/", "_")
    name = f"plot-{request.family}-{ratio_tag}-rank{request.rank}.svg"
    return Path(env_dir) / name


def run(request: CommandRequest) -> int:
    """Execute one request, write its report, return the exit status."""
    params = CantorParams(request.ratio)
    command = request.command
    echo = _request_echo(request)

    if command == "level":
        builder = prime_level_set if request.variant == "prime" else level_set
        ls = builder(params, request.rank)
        if request.output == "csv":
            _write(interval_set_csv(ls.intervals), request.out_path)
        else:
            _write(to_json(envelope(echo, level_set_payload(ls))), request.out_path)
        return 0

    if command == "gaps":
        if request.step < 1:
            raise UsageError("--step is 1-based")
        records = gap_list(params, request.step)
        if request.output == "csv":
            _write(gap_list_csv(records), request.out_path)
        else:
            _write(
                to_json(envelope(echo, gap_list_payload(records, params.ratio))),
                request.out_path,
            )
        return 0

    if command == "square":
        squared = squared_level_set(params, request.rank)
        if request.output == "csv":
            _write(interval_set_csv(squared), request.out_path)
        else:
            payload = squared_level_set_payload(squared, params.ratio, request.rank)
            _write(to_json(envelope(echo, payload)), request.out_path)
        return 0

    if command == "quotient":
        if request.window is None:
            prime = prime_level_set(params, request.rank)
            cover = pairwise_ratio_cover(prime, prime)
            payload = quotient_cover_payload(cover)
            covered = cover.intervals
        else:
            window = Interval(request.window[0], request.window[1])
            covered = quotient_outer_cover(params, request.rank, window)
            payload = window_cover_payload(covered, params.ratio, request.rank, window)
        if request.output == "csv":
            _write(interval_set_csv(covered), request.out_path)
        else:
            _write(to_json(envelope(echo, payload)), request.out_path)
        return 0

    if command == "visible":
        cert = classify_slope(params, request.slope, request.max_rank)
        if request.output == "csv":
            _write(certificate_csv(cert, request.slope), request.out_path)
        else:
            payload = certificate_payload(cert, request.slope)
            _write(to_json(envelope(echo, payload)), request.out_path)
        return 0

    if command in ("verify", "thresholds"):
        if command == "thresholds":
            report = threshold_tests(params)
        elif request.check == "merge":
            report = sweep_merge(params, request.j_max)
        elif request.check == "squared-gaps":
            report = verify_non_self_similarity(params, request.n_max)
        else:
            report = verify_closed_interval_conditions(params, request.grid)
        if request.output == "csv":
            _write(verification_csv(report), request.out_path)
        else:
            _write(to_json(envelope(echo, verification_payload(report))), request.out_path)
        return 0 if report.passed else 1

    if command == "plot":
        out = _plot_out_path(request)
        if request.family == "prime":
            layers = [
                (prime_level_set(params, r).intervals, f"prime rank {r}")
                for r in range(request.rank + 1)
            ]
            hull = Interval(1 - params.ratio, Fraction(1))
        elif request.family == "squared":
            layers = [
                (squared_level_set(params, r), f"squared rank {r}")
                for r in range(request.rank + 1)
            ]
            hull = Interval(Fraction(0), Fraction(1))
        else:
            layers = [
                (level_set(params, r).intervals, f"rank {r}")
                for r in range(request.rank + 1)
            ]
            hull = Interval(Fraction(0), Fraction(1))
        emit_svg(layers, hull, out)
        return 0

    raise UsageError(f"unknown command {command!r}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_call:
        return int(exit_call.code or 0)
    try:
        request = request_from_args(args)
        return run(request)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
