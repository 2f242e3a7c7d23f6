"""Command-line front end: ``spectrum``, ``report`` and ``enumerate``.

Exit codes: 0 success, 2 config error, 3 domain or budget error,
4 numerical assertion failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path
from typing import Sequence, TextIO

from gldpc_spectrum.config import load_config
from gldpc_spectrum.ensemble import SPECTRUM_KINDS, Ensemble, design_rate, max_weight_fraction
from gldpc_spectrum.errors import ConfigError, DomainError, NoCrossingError, NumericalAssertionError
from gldpc_spectrum.gf2codes import bd_ssef, enumerate_wef, map_ssef, read_matrix
from gldpc_spectrum.spectral import alpha_grid, relative_min_distance, sweep, symmetry_report

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_NUMERIC = 4

DEFAULT_GRID = 999


def _fmt(x: float, digits: int = 6) -> str:
    text = f"{x:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _parse_alpha_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ConfigError(f"--alpha-list: not a comma-separated list of numbers: {text!r}") from None


def write_spectrum_csv(
    ens: Ensemble,
    out: TextIO,
    grid: int = DEFAULT_GRID,
    alphas: Sequence[float] | None = None,
    units: str = "nats",
) -> list[tuple[float, str]]:
    """Write ``alpha,G,z0`` rows in increasing alpha; returns skipped points."""
    if alphas is None:
        if grid < 0:
            raise ConfigError(f"--grid must be >= 0, got {grid}")
        alphas = alpha_grid(max_weight_fraction(ens), grid)
    points, skipped = sweep(ens, sorted(alphas))
    scale = 1.0 / math.log(2.0) if units == "bits" else 1.0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["alpha", "G", "z0"])
    for p in points:
        writer.writerow([f"{p.alpha:.15g}", f"{p.g * scale:.15g}", f"{p.z0:.15g}"])
    return skipped


def cmd_spectrum(args: argparse.Namespace) -> int:
    ens = load_config(args.config, args.spectrum)
    alphas = _parse_alpha_list(args.alpha_list) if args.alpha_list else None
    if args.output:
        buf = io.StringIO()
        skipped = write_spectrum_csv(ens, buf, args.grid, alphas, args.units)
        Path(args.output).write_text(buf.getvalue())
    else:
        skipped = write_spectrum_csv(ens, sys.stdout, args.grid, alphas, args.units)
    if skipped:
        shown = ", ".join(f"{a:g}" for a, _ in skipped[:5])
        more = " ..." if len(skipped) > 5 else ""
        print(
            f"warning: {len(skipped)} alpha value(s) outside (0, M) skipped: {shown}{more}",
            file=sys.stderr,
        )
    return EXIT_OK


def format_report(ens: Ensemble) -> str:
    lines = [f"q = {ens.q}", f"spectrum = {ens.spectrum}", f"CN types = {len(ens.types)}"]
    for t in ens.normalized.types:
        h = "?" if t.h is None else str(t.h)
        lines.append(
            f"  [{t.label}] s = {t.s}, h = {h}, r = {t.r}, u_bar = {t.u_bar}, "
            f"gamma = {_fmt(t.gamma)}, rho = {_fmt(t.rho)}, "
            f"symmetric = {_flag(t.enum.is_symmetric())}, enumerator = {t.enum.to_literal()}"
        )
    m = max_weight_fraction(ens)
    lines.append(f"int_rho = {_fmt(ens.int_rho)}")
    lines.append(f"M = {_fmt(m)}")
    try:
        lines.append(f"rate = {_fmt(design_rate(ens))}")
    except ValueError as exc:
        lines.append(f"rate = n/a ({exc})")

    try:
        a_star = relative_min_distance(ens)
    except NoCrossingError as exc:
        lines.append(f"alpha* = not found ({exc})")
    else:
        if a_star == 0.0:
            lines.append("alpha* = 0 (bad spectral shape behavior)")
        else:
            lines.append(f"alpha* = {_fmt(a_star)}")

    rep = symmetry_report(ens)
    points = ", ".join(_fmt(x) for x in rep.gamma_fixed_points) or "none"
    lines += [
        f"all local enumerators symmetric = {_flag(rep.all_wefs_symmetric)}",
        f"Gamma(M) = {_fmt(rep.gamma_at_m)}",
        f"M is a Gamma fixed point = {_flag(rep.m_is_fixed_point)}",
        f"Gamma fixed point(s) in (0,1]: {points}",
        f"verdict = {rep.verdict}",
    ]
    return "\n".join(lines) + "\n"


def cmd_report(args: argparse.Namespace) -> int:
    ens = load_config(args.config, args.spectrum)
    sys.stdout.write(format_report(ens))
    return EXIT_OK


def format_enumerator(path: str | Path, kind: str) -> str:
    try:
        g = read_matrix(path)
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read matrix: {exc}") from None
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    try:
        wef = enumerate_wef(g)
        if kind == "wef":
            enum = wef
        elif kind == "map-ss":
            enum = map_ssef(g)
        else:
            enum = bd_ssef(wef.length, wef.min_weight)
    except DomainError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return (
        f"{enum.to_literal()}\n"
        f"s={enum.length}\n"
        f"r={enum.min_weight}\n"
        f"u_bar={enum.max_weight}\n"
        f"symmetric={_flag(enum.is_symmetric())}\n"
    )


def cmd_enumerate(args: argparse.Namespace) -> int:
    sys.stdout.write(format_enumerator(args.generator, args.kind))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gldpc-spectrum",
        description="Weight and stopping-set spectral shapes of check-hybrid GLDPC ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="sweep G(alpha) and write CSV")
    sp.add_argument("--config", required=True)
    sp.add_argument("--spectrum", choices=SPECTRUM_KINDS, help="override the config's spectrum mode")
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID, help="number of points inside (0, M)")
    sp.add_argument("--alpha-list", help="comma-separated alpha values instead of a grid")
    sp.add_argument("--units", choices=("nats", "bits"), default="nats")
    sp.add_argument("--output", help="CSV path (default: standard output)")
    sp.set_defaults(func=cmd_spectrum)

    rp = sub.add_parser("report", help="summarize an ensemble")
    rp.add_argument("--config", required=True)
    rp.add_argument("--spectrum", choices=SPECTRUM_KINDS)
    rp.set_defaults(func=cmd_report)

    ep = sub.add_parser("enumerate", help="local enumerator of a generator matrix")
    ep.add_argument("--generator", required=True, help="matrix file: 'rows cols' then 0/1 rows")
    ep.add_argument("--kind", choices=("wef", "map-ss", "bd-ss"), default="wef")
    ep.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalAssertionError as exc:
        print(f"numerical assertion failed: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
