"""Command-line experiment runner.

Subcommands: evolve (time series), steady (detuning sweep), surface
((delta, p) grid), optimum (detuning maximiser), validate (invariant suite).
Exit codes: 0 success, 1 validation failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, experiments
from .dephasing import CoherentState, FieldInitSpec, NumberState
from .experiments import ExperimentConfig

__all__ = ["build_parser", "main"]


def parse_field_flag(text: str, dim: int | None) -> FieldInitSpec:
    """Parse --field values: 'number:<k>' or 'coherent:<modulus>[,<phase>]'."""
    kind, _, rest = text.partition(":")
    bad = ValueError(
        f"cannot parse field spec {text!r}; expected number:<k> or coherent:<modulus>[,<phase>]"
    )
    if kind == "number" and rest:
        try:
            k = int(rest)
        except ValueError:
            raise bad from None
        return NumberState(k, dim=dim)
    if kind == "coherent" and rest:
        parts = rest.split(",")
        if len(parts) not in (1, 2):
            raise bad
        try:
            modulus = float(parts[0])
            phase = float(parts[1]) if len(parts) == 2 else 0.0
        except ValueError:
            raise bad from None
        return CoherentState(modulus, phase, dim if dim is not None else 30)
    raise bad


def parse_range_flag(text: str) -> tuple[float, float, float]:
    """Parse 'lo:hi:step' range flags."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"cannot parse range {text!r}; expected lo:hi:step")
    lo, hi, step = (float(p) for p in parts)
    return lo, hi, step


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="number:1", metavar="SPEC",
                        help="initial field: number:<k> or coherent:<modulus>[,<phase>] "
                             "(default number:1)")
    common.add_argument("--dim", type=int, default=None, metavar="N_F",
                        help="field truncation dimension (default: k+2 for number, 30 for coherent)")
    common.add_argument("--p", type=float, default=0.5,
                        help="initial excited-state population of the atom (default 0.5)")
    common.add_argument("--delta", type=float, default=0.0,
                        help="detuning omega_a - omega_f in units of omega_a (default 0)")
    common.add_argument("--g", type=float, default=0.1,
                        help="atom-field coupling in units of omega_a (default 0.1)")
    common.add_argument("--gamma", type=float, default=0.5,
                        help="intrinsic dephasing rate (default 0.5)")
    common.add_argument("--tmax", type=float, default=25.0,
                        help="time-series horizon in units of 1/omega_a (default 25)")
    common.add_argument("--steps", type=int, default=201,
                        help="number of time samples (default 201)")
    common.add_argument("--delta-range", default="0:1:0.01", metavar="LO:HI:STEP",
                        help="detuning grid for sweeps (default 0:1:0.01)")
    common.add_argument("--p-range", default="0:1:0.1", metavar="LO:HI:STEP",
                        help="population grid for surfaces (default 0:1:0.1)")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write the CSV here instead of stdout")
    common.add_argument("--plot-script", action="store_true",
                        help="emit a matplotlib script next to the CSV (requires --out)")

    parser = argparse.ArgumentParser(
        prog="jcdiscord",
        description="Jaynes-Cummings intrinsic-dephasing simulator with "
                    "geometric-discord and negativity diagnostics",
    )
    parser.add_argument("--version", action="version", version=f"jcdiscord {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("evolve", parents=[common],
                   help="correlation measures on a uniform time grid")
    sub.add_parser("steady", parents=[common],
                   help="steady-state discord across the detuning grid")
    sub.add_parser("surface", parents=[common],
                   help="steady-state discord over the (delta, p) grid")
    sub.add_parser("optimum", parents=[common],
                   help="detuning that maximises the steady-state discord")
    sub.add_parser("validate", parents=[common],
                   help="run the invariant suite and report pass/fail per check")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    config = ExperimentConfig(
        field=parse_field_flag(args.field, args.dim),
        p=args.p,
        g=args.g,
        delta=args.delta,
        gamma=args.gamma,
        t_max=args.tmax,
        steps=args.steps,
        delta_range=parse_range_flag(args.delta_range),
        p_range=parse_range_flag(args.p_range),
        out=args.out,
        plot_script=args.plot_script,
    )
    if config.plot_script and config.out is None:
        raise ValueError("--plot-script needs --out to know where the CSV lives")
    config.validate()
    return config


def _deliver_table(table: experiments.SweepTable, config: ExperimentConfig, kind: str) -> None:
    if config.out is None:
        sys.stdout.write(table.to_csv())
        return
    table.write(config.out)
    print(f"wrote {config.out}")
    if config.plot_script:
        print(f"wrote {experiments.emit_plot_script(config.out, kind)}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        if args.command == "evolve":
            _deliver_table(experiments.run_timeseries(config), config, "timeseries")
        elif args.command == "steady":
            _deliver_table(experiments.sweep_detuning_steady(config), config, "sweep")
        elif args.command == "surface":
            _deliver_table(experiments.surface_grid(config), config, "surface")
        elif args.command == "optimum":
            result = experiments.find_optimal_detuning(config)
            if result.delta_opt is None:
                print("delta_opt=undefined (steady discord is identically zero)")
                print("value=%.11e" % 0.0)
            else:
                print("delta_opt=%.11e" % result.delta_opt)
                print("value=%.11e" % result.value)
            if config.out is not None:
                rows = [] if result.delta_opt is None else [(result.delta_opt, result.value)]
                table = experiments.SweepTable(
                    columns=("delta_opt", "D_G_infinity_max"),
                    rows=rows,
                    provenance=config.provenance("optimum")
                    + (() if rows else ("optimum: undefined (flat zero curve)",)),
                )
                table.write(config.out)
                print(f"wrote {config.out}")
        else:  # validate
            code, lines = experiments.run_validation(config)
            for line in lines:
                print(line)
            return code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
