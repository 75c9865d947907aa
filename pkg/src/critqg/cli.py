"""Command-line driver: run, check, sweep, spectrum.

Exit codes: 0 success, 1 a check failed, 2 usage or configuration error,
3 blow-up detected.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import logging
import math
import sys
from dataclasses import asdict, replace
from pathlib import Path

import numpy as np

from . import __version__
from .config import KEYS, ConfigError, parse_config
from .harness import FAIL, INCONCLUSIVE, SUITES, run_suite
from .initial import generate_initial
from .integrator import BlowUpError, SimConfig, run
from .io import (
    read_snapshot,
    shell_spectrum,
    write_heatmap,
    write_manifest,
    write_reports,
    write_snapshot,
    write_timeseries,
)
from .spectral import PhysicalField, diagnostic_grid_size, grid_transform

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BLOWUP = 0, 1, 2, 3

log = logging.getLogger("critqg")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="critqg", description="Dissipative QG simulator and estimate checker.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    r = sub.add_parser("run", help="integrate a configuration and write outputs")
    r.add_argument("config")

    c = sub.add_parser("check", help="run a suite of checks")
    c.add_argument("config")
    c.add_argument("--suite", default="monotonicity", choices=SUITES)

    s = sub.add_parser("sweep", help="rerun a configuration over values of one key")
    s.add_argument("config")
    s.add_argument("--param", required=True)
    s.add_argument("--values", required=True, help="comma-separated values")

    sp = sub.add_parser("spectrum", help="print the shell-averaged spectrum of a snapshot")
    sp.add_argument("snapshot")
    return p


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _load_config(path: str) -> SimConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config(text)


def _echo(cfg: SimConfig) -> dict:
    echo = asdict(cfg)
    echo.update(echo.pop("rhs"))
    return echo


def execute_run(cfg: SimConfig, out_dir: Path) -> tuple[object, list[Path]]:
    """Run one configuration into ``out_dir``; returns (trajectory, files written)."""
    out_dir.mkdir(parents=True, exist_ok=True)
    started = _now()
    data = generate_initial(cfg.initial, cfg.amplitude, cfg.n_max, cfg.seed)
    files: list[Path] = []
    blowup = None
    try:
        traj = run(data, cfg)
    except BlowUpError as exc:
        blowup, traj = exc, exc.trajectory
    files.append(write_timeseries(traj, out_dir / "timeseries.csv"))
    for i, (t, f) in enumerate(traj.snapshots):
        files.append(write_snapshot(f, t, out_dir / f"snapshot_{i:05d}.bin"))
    if traj.final is not None:
        m = diagnostic_grid_size(cfg.n_max)
        grid = PhysicalField(grid_transform(cfg.n_max, m).to_grid(traj.final.coeffs))
        files.append(write_heatmap(grid, out_dir / "final.pgm"))
    files.append(write_manifest(out_dir / "manifest.json", _echo(cfg), __version__, cfg.seed,
                                started, _now(), files))
    if blowup is not None:
        raise blowup
    return traj, files


def cmd_run(args) -> int:
    cfg = _load_config(args.config)
    try:
        traj, files = execute_run(cfg, Path(cfg.output_dir))
    except BlowUpError as exc:
        print(f"blow-up: {exc}", file=sys.stderr)
        return EXIT_BLOWUP
    print(f"{len(traj.records)} samples, t_end={traj.times[-1]:g}; wrote {len(files)} files to {cfg.output_dir}")
    return EXIT_OK


def cmd_check(args) -> int:
    cfg = _load_config(args.config)
    reports = run_suite(args.suite, cfg)
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_reports(reports, out / f"reports_{args.suite}.json")
    for r in reports:
        print(f"{r.verdict.upper():13s} {r.check_name:32s} margin={r.margin:.3g} {r.note}".rstrip())
    if any("blowup_time" in r.measured for r in reports):
        return EXIT_BLOWUP
    judged = [r for r in reports if r.verdict != INCONCLUSIVE]
    return EXIT_CHECK_FAILED if any(r.verdict == FAIL for r in judged) else EXIT_OK


def _with_value(cfg: SimConfig, key: str, value: str) -> SimConfig:
    target, name, conv = KEYS[key]
    try:
        v = conv(value)
    except ValueError as exc:
        raise ConfigError(f"cannot parse {key}={value!r}: {exc}") from None
    try:
        if target == "rhs":
            return cfg.with_rhs(**{name: v})
        return replace(cfg, **{name: v})
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    if args.param not in KEYS or args.param == "output_dir":
        raise ConfigError(f"cannot sweep over {args.param!r}")
    values = [v.strip() for v in args.values.split(",") if v.strip()]
    if not values:
        raise UsageError("--values is empty")
    base = Path(cfg.output_dir)
    results = []
    for v in values:
        member = _with_value(cfg, args.param, v)
        member = replace(member, output_dir=str(base / f"{args.param}={v}"))
        try:
            traj, _ = execute_run(member, Path(member.output_dir))
        except BlowUpError as exc:
            print(f"blow-up for {args.param}={v}: {exc}", file=sys.stderr)
            return EXIT_BLOWUP
        results.append((v, member, traj))
    rows = sweep_table(args.param, results)
    base.mkdir(parents=True, exist_ok=True)
    with (base / f"sweep_{args.param}.csv").open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerows(rows)
    csv.writer(sys.stdout, lineterminator="\n").writerows(rows)
    return EXIT_OK


def sweep_table(param: str, results) -> list[list[str]]:
    """Final-time norms per member; for dt sweeps also the difference from the
    finest run and the observed order between successive members."""
    header = [param, "t_final", "l2", "linf", "h2", "Y"]
    is_dt = param == "dt"
    if is_dt:
        header += ["diff_vs_finest", "observed_order"]
    rows = [header]
    finest = min(results, key=lambda r: r[1].dt)[2].final if is_dt else None
    prev = None
    for v, member, traj in results:
        rec = traj.records[-1]
        row = [v] + [format(x, ".17g") for x in (rec.t, rec.lp_norms[2.0], rec.lp_norms[math.inf],
                                                 rec.sobolev[2.0], rec.fourier_l1)]
        if is_dt:
            diff = float(np.max(np.abs(traj.final.coeffs - finest.embed(traj.final.n_max).coeffs)))
            order = ""
            if prev is not None and diff > 0 and prev[1] > 0 and member.dt != prev[0]:
                order = format(math.log(prev[1] / diff) / math.log(prev[0] / member.dt), ".6g")
            row += [format(diff, ".17g"), order]
            prev = (member.dt, diff)
        rows.append(row)
    return rows


def cmd_spectrum(args) -> int:
    field_, time = read_snapshot(args.snapshot)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["k", "mean_abs_coeff", "modes"])
    for k, amp, count in shell_spectrum(field_):
        w.writerow([k, format(amp, ".17g"), count])
    return EXIT_OK


COMMANDS = {"run": cmd_run, "check": cmd_check, "sweep": cmd_sweep, "spectrum": cmd_spectrum}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage())
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
