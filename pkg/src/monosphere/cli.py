"""Command-line interface: ``monosphere {spectrum,wavefunction,figure1,verify,landau}``.

Exit codes: 0 success, 1 domain or usage error, 2 verification failure,
3 internal numeric error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__, limits, verify
from .constants import GAUSSIAN, UNIT_SYSTEMS, constants
from .errors import DomainError, NumericError
from .output import Table, to_csv, to_json
from .spectrum import PhysicalScale, QuantumNumbers, landau_energy, level_table
from .wavefunction import build, evaluate_t

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_NUMERIC = 0, 1, 2, 3

COMMANDS = ("spectrum", "wavefunction", "verify", "figure1", "landau")
FORMATS = ("csv", "json")
FIGURE1_SERIES = {0: "dots", 5: "diamonds", 10: "triangles"}
# options whose values may start with '-' (negative ranges such as -10..10)
_RANGE_OPTIONS = ("--m", "--ell", "--p")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    output_format: str = "csv"
    output_path: str | None = None
    tolerance_overrides: dict[str, float] = field(default_factory=dict)
    parameters: dict = field(default_factory=dict)

    _KEYS = ("command", "output_format", "output_path", "tolerance_overrides", "parameters")

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}; expected csv or json")
        for key, val in self.tolerance_overrides.items():
            if not val > 0:
                raise UsageError(f"tolerance {key}={val} must be positive")

    @classmethod
    def from_mapping(cls, data: dict) -> "RunConfig":
        unknown = sorted(set(data) - set(cls._KEYS))
        if unknown:
            raise UsageError(f"unknown configuration keys: {', '.join(unknown)}")
        return cls(**data)


def parse_int_list(text: str) -> list[int]:
    """'a..b' inclusive ranges, single integers, and comma lists of either."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise UsageError(f"empty item in list {text!r}")
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise UsageError(f"descending range {part!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(part))
        except ValueError:
            raise UsageError(f"not an integer list: {text!r}") from None
    return values


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"not a list of reals: {text!r}") from None


def parse_tolerance(items: list[str]) -> dict[str, float]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--tolerance expects SUITE=VALUE, got {item!r}")
        key, val = item.split("=", 1)
        try:
            out[key.strip()] = float(val)
        except ValueError:
            raise UsageError(f"tolerance value {val!r} is not a number") from None
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monosphere", description="Charge on a sphere around a magnetic monopole.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="csv")
        p.add_argument("--output", default=None, help="output file (default: standard output)")

    sp = sub.add_parser("spectrum", help="exact dimensionless energy table")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", required=True)
    sp.add_argument("--m", required=True)
    sp.add_argument("--skip-inadmissible", action="store_true")
    common(sp)

    wp = sub.add_parser("wavefunction", help="T(mu) on a uniform mu grid")
    wp.add_argument("--ell", type=int, required=True)
    wp.add_argument("--m", type=int, required=True)
    wp.add_argument("--p", type=int, required=True)
    wp.add_argument("--points", type=int, default=101)
    common(wp)

    fp = sub.add_parser("figure1", help="p = 10 level dataset for ell = 0, 5, 10")
    common(fp)

    vp = sub.add_parser("verify", help="run property suites")
    vp.add_argument("--suite", default="all", choices=("all",) + tuple(verify.SUITES))
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--tolerance", action="append", default=[], metavar="SUITE=VAL")
    vp.add_argument("--p", type=int, default=None, help="restrict the oracle suite to this flux")
    vp.add_argument("--m", type=int, default=None, help="restrict the oracle suite to this m")
    common(vp)

    lp = sub.add_parser("landau", help="flat-plane Landau levels and sphere convergence")
    lp.add_argument("--n-max", type=int, default=2)
    lp.add_argument("--m", default="0")
    lp.add_argument("--B", type=float, required=True, help="field (gauss, or tesla with --unit-system si)")
    lp.add_argument("--unit-system", choices=UNIT_SYSTEMS, default=GAUSSIAN)
    lp.add_argument("--mass", type=float, default=None, help="effective mass (default: electron)")
    lp.add_argument("--radius", type=float, default=1e-5, help="sphere radius for the level table")
    group = lp.add_mutually_exclusive_group()
    group.add_argument("--radii", default=None, help="comma list of radii for convergence records")
    group.add_argument("--flux-quanta", default=None, help="integer fluxes p; radii chosen so flux is exact")
    common(lp)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RANGE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _emit(cfg: RunConfig, tables: dict[str, Table], seed=None) -> str:
    if cfg.output_format == "json":
        return to_json(cfg.command, __version__, seed, cfg.parameters, tables)
    return to_csv(list(tables.values()))


def _write(text: str, path: str | None, stdout) -> None:
    if path is None:
        stdout.write(text)
        return
    Path(path).write_text(text)


def cmd_spectrum(cfg: RunConfig) -> tuple[dict[str, Table], int]:
    prm = cfg.parameters
    rows = level_table(prm["p"], prm["ell"], prm["m"], skip_inadmissible=prm.get("skip_inadmissible", False))
    table = Table(["ell", "m", "p", "two_epsilon", "epsilon"], [int, int, int, int, float])
    table.rows = [(r.ell, r.m, r.p, r.two_epsilon, r.epsilon) for r in rows]
    return {"rows": table}, EXIT_OK


def figure1_table() -> Table:
    rows = level_table(10, sorted(FIGURE1_SERIES), range(-10, 11))
    table = Table(
        ["series", "ell", "m", "p", "two_epsilon", "epsilon"], [str, int, int, int, int, float]
    )
    table.rows = [(FIGURE1_SERIES[r.ell], r.ell, r.m, r.p, r.two_epsilon, r.epsilon) for r in rows]
    return table


def gnuplot_script(data_name: str) -> str:
    lines = [
        "# energy levels in units of hbar^2/(2 m* R^2) versus m at p = 10",
        "set datafile separator ','",
        "set key autotitle columnhead",
        "set xlabel 'm'",
        "set ylabel 'epsilon'",
        "plot \\",
    ]
    styles = {"dots": 7, "diamonds": 13, "triangles": 9}
    parts = [
        f"  '{data_name}' using 3:(strcol(1) eq '{name}' ? $6 : 1/0) with points pt {pt} title 'ell={ell}'"
        for ell, name in FIGURE1_SERIES.items()
        for pt in [styles[name]]
    ]
    lines.append(", \\\n".join(parts))
    return "\n".join(lines) + "\n"


def cmd_wavefunction(cfg: RunConfig) -> tuple[dict[str, Table], int]:
    prm = cfg.parameters
    if prm["points"] < 2:
        raise DomainError("--points must be >= 2")
    f = build(QuantumNumbers(prm["ell"], prm["m"], prm["p"]))
    mu = np.linspace(-1.0, 1.0, prm["points"])
    t = np.atleast_1d(evaluate_t(f, mu))
    table = Table(["mu", "t_value"], [float, float], [(float(a), float(b)) for a, b in zip(mu, t)])
    return {"rows": table}, EXIT_OK


def report_table(report: verify.VerificationReport) -> Table:
    table = Table(
        ["suite", "property", "measured", "relation", "threshold", "passed"],
        [str, str, float, str, str, str],
    )
    for r in report.results:
        thr = r.threshold
        thr_s = f"{thr[0]!r}..{thr[1]!r}" if isinstance(thr, tuple) else repr(thr)
        table.rows.append((r.suite, r.name, r.measured, r.relation, thr_s, "pass" if r.passed else "FAIL"))
    return table


def cmd_verify(cfg: RunConfig) -> tuple[dict[str, Table], int]:
    prm = cfg.parameters
    try:
        report = verify.run(
            prm["suite"], seed=prm["seed"], tolerance_overrides=cfg.tolerance_overrides, p=prm.get("p"), m=prm.get("m")
        )
    except DomainError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"rows": report_table(report)}, EXIT_OK if report.passed else EXIT_VERIFY


def _landau_scale(prm) -> PhysicalScale:
    if not prm["B"] > 0:
        raise DomainError(f"Landau levels need B > 0, got B={prm['B']}")
    mass = prm["mass"] if prm["mass"] is not None else constants(prm["unit_system"])["m_e"]
    return PhysicalScale(mass, prm["radius"], prm["B"], prm["unit_system"])


def cmd_landau(cfg: RunConfig) -> tuple[dict[str, Table], int]:
    prm = cfg.parameters
    scale = _landau_scale(prm)
    hw = scale.hbar * scale.cyclotron_frequency
    levels = Table(["n", "m", "energy", "energy_over_hbar_omega_c"], [int, int, float, float])
    for n in range(prm["n_max"] + 1):
        for m in prm["m"]:
            e = landau_energy(n, m, scale)
            levels.rows.append((n, m, e, (n + (m + abs(m) + 1) / 2)))
    tables = {"rows": levels}
    radii = None
    if prm.get("flux_quanta") is not None:
        radii = limits.radii_for_flux(prm["flux_quanta"], scale)
    elif prm.get("radii") is not None:
        radii = prm["radii"]
    if radii is not None:
        conv = Table(["n", "m", "radius", "p", "relative_error", "rate"], [int, int, float, int, float, float])
        for n in range(prm["n_max"] + 1):
            for m in prm["m"]:
                for rec in limits.landau_convergence(n, m, radii, scale):
                    p = scale.with_radius(rec.parameter).flux_quanta()
                    conv.rows.append((n, m, rec.parameter, p, rec.error, rec.rate_estimate))
        tables["convergence"] = conv
    return tables, EXIT_OK


_HANDLERS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
    "landau": cmd_landau,
}


def config_from_args(args: argparse.Namespace) -> RunConfig:
    prm = {}
    tol = {}
    if args.command == "spectrum":
        prm = {
            "p": args.p,
            "ell": parse_int_list(args.ell),
            "m": parse_int_list(args.m),
            "skip_inadmissible": args.skip_inadmissible,
        }
    elif args.command == "wavefunction":
        prm = {"ell": args.ell, "m": args.m, "p": args.p, "points": args.points}
    elif args.command == "verify":
        prm = {"suite": args.suite, "seed": args.seed, "p": args.p, "m": args.m}
        tol = parse_tolerance(args.tolerance)
    elif args.command == "landau":
        prm = {
            "n_max": args.n_max,
            "m": parse_int_list(args.m),
            "B": args.B,
            "unit_system": args.unit_system,
            "mass": args.mass,
            "radius": args.radius,
            "radii": parse_float_list(args.radii) if args.radii else None,
            "flux_quanta": parse_int_list(args.flux_quanta) if args.flux_quanta else None,
        }
    return RunConfig.from_mapping(
        {
            "command": args.command,
            "output_format": args.format,
            "output_path": args.output,
            "tolerance_overrides": tol,
            "parameters": prm,
        }
    )


def run(cfg: RunConfig, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    if cfg.command == "figure1":
        table = figure1_table()
        text = _emit(cfg, {"rows": table})
        _write(text, cfg.output_path, stdout)
        if cfg.output_path is not None and cfg.output_format == "csv":
            path = Path(cfg.output_path)
            path.with_suffix(".gp").write_text(gnuplot_script(path.name))
        return EXIT_OK
    tables, code = _HANDLERS[cfg.command](cfg)
    seed = cfg.parameters.get("seed") if cfg.command == "verify" else None
    _write(_emit(cfg, tables, seed), cfg.output_path, stdout)
    return code


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stderr = sys.stderr if stderr is None else stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
        return run(config_from_args(args), stdout)
    except (UsageError, DomainError) as exc:
        print(f"monosphere: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except NumericError as exc:
        print(f"monosphere: numeric error: {exc}", file=stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"monosphere: I/O error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except Exception as exc:  # noqa: BLE001 - anything else is an internal failure
        print(f"monosphere: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
