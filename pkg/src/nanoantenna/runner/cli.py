"""Command-line interface.

Parameters come from an optional flat ``key=value`` file (``--config``)
and from flags; flags win.  Rates given with ``--gamma1``/``--gamma2`` are
raw and get renormalized to a mean of one; all other frequencies are in
units of the mean damping rate.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from ..coupling import collective_params
from ..model import AtomPair, ConfigError, CouplingMode, Drive, validate
from ..observables import mode_angles
from .csvio import write_csv
from .presets import PRESETS, preset
from .sweep import SweepError, SweepSpec, run_sweep
from .svg import render_svg

PARAMS = {
    "gamma1": 1.0, "gamma2": 1.0, "delta": 0.0, "separation": 0.25,
    "dipole_axis_angle": math.pi / 2, "rabi": 0.2, "detuning_l": 0.0,
    "propagation_angle": math.pi / 2, "initial_phase": 0.0,
    "coupling": "independent", "omega12": 0.0, "gamma12": 0.0, "engine": "master",
}
STRING_PARAMS = {"coupling", "engine"}


def read_config_file(path):
    """Parse a flat ``key=value`` file; ``#`` starts a comment."""
    values = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc.strerror or exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in PARAMS:
            raise ConfigError([f"{path}:{lineno}: unrecognized line {raw!r}"])
        value = value.strip()
        try:
            values[key] = value if key in STRING_PARAMS else float(value)
        except ValueError:
            raise ConfigError([f"{path}:{lineno}: {key} needs a number, got {value!r}"]) from None
    return values


def merged_params(args):
    params = dict(PARAMS)
    if args.config:
        params.update(read_config_file(args.config))
    for key in PARAMS:
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def configuration(params):
    pair = AtomPair.from_rates(params["gamma1"], params["gamma2"], delta=params["delta"],
                               separation=params["separation"],
                               dipole_axis_angle=params["dipole_axis_angle"])
    drive = Drive(params["rabi"], params["detuning_l"], params["propagation_angle"],
                  params["initial_phase"])
    mode = CouplingMode(params["coupling"], params["omega12"], params["gamma12"])
    return validate(pair, drive, mode)


def _common(p):
    g = p.add_argument_group("configuration")
    g.add_argument("--config", help="flat key=value parameter file")
    g.add_argument("--gamma1", type=float, help="damping rate of atom 1 (raw units)")
    g.add_argument("--gamma2", type=float, help="damping rate of atom 2 (raw units)")
    g.add_argument("--delta", type=float, help="atomic frequency difference")
    g.add_argument("--separation", type=float, help="interatomic distance in wavelengths")
    g.add_argument("--dipole-axis-angle", dest="dipole_axis_angle", type=float)
    g.add_argument("--rabi", type=float, help="Rabi frequency")
    g.add_argument("--detuning-l", dest="detuning_l", type=float, help="laser detuning")
    g.add_argument("--propagation-angle", dest="propagation_angle", type=float)
    g.add_argument("--initial-phase", dest="initial_phase", type=float)
    g.add_argument("--coupling", choices=CouplingMode.KINDS)
    g.add_argument("--omega12", type=float, help="dipole-dipole shift (custom coupling)")
    g.add_argument("--gamma12", type=float, help="collective damping (custom coupling)")
    g.add_argument("--engine", choices=("master", "analytic"))


def _outputs(p):
    p.add_argument("--out", help="CSV destination (default: standard output)")
    p.add_argument("--svg", help="also render an SVG plot to this path")
    p.add_argument("--figure", help="also render a matplotlib figure (PNG, PDF, ...) to this path")
    p.add_argument("--workers", type=int, default=1)


def build_parser():
    parser = argparse.ArgumentParser(prog="nanoantenna", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("angular", help="intensity vs observation angle")
    _common(p)
    _outputs(p)
    p.add_argument("--count", type=int, default=721)

    for name, helptext in (("detuning", "intensity vs laser detuning"),
                           ("contrast", "contrast factors vs laser detuning")):
        p = sub.add_parser(name, help=helptext)
        _common(p)
        _outputs(p)
        p.add_argument("--range", nargs=3, type=float, default=(-10.0, 10.0, 401),
                       metavar=("START", "STOP", "COUNT"))
        if name == "detuning":
            p.add_argument("--theta", type=float, action="append",
                           help="observation angle in units of pi (repeatable)")

    p = sub.add_parser("modes", help="symmetric and antisymmetric mode directions")
    _common(p)

    p = sub.add_parser("couplings", help="collective couplings and mixing angle")
    _common(p)

    p = sub.add_parser("reproduce", help="regenerate a published figure")
    p.add_argument("figure_name", choices=sorted(PRESETS, key=lambda s: int(s[3:])))
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-figure", action="store_true", help="skip the matplotlib figure")
    return parser


def _emit(result, args, style):
    if args.out:
        write_csv(result, args.out)
    else:
        write_csv(result, sys.stdout)
    if args.svg:
        render_svg(result, style, args.svg)
    if args.figure:
        from .figures import render_figure
        render_figure(result, style, args.figure)


def _sweep(args, axis, start, stop, count, observables, theta_groups=()):
    params = merged_params(args)
    spec = SweepSpec(axis, start, stop, int(count), configuration(params), observables,
                     engine=params["engine"], theta_groups=theta_groups)
    return run_sweep(spec, workers=args.workers)


def cmd_angular(args):
    result = _sweep(args, "theta", 0.0, math.pi, args.count, ("intensity", "decomposition"))
    _emit(result, args, "polar")


def cmd_detuning(args):
    thetas = args.theta or [1 / 3, 2 / 3]
    groups = tuple((t * math.pi,) for t in thetas)
    result = _sweep(args, "detuning_l", *args.range, ("intensity", "intensity_total"), groups)
    _emit(result, args, "cartesian")


def cmd_contrast(args):
    result = _sweep(args, "detuning_l", *args.range, ("c_antisym", "c_sym"))
    _emit(result, args, "cartesian")


def cmd_modes(args):
    config = configuration(merged_params(args))
    modes = mode_angles(config.pair.separation)
    print("family,n,theta,theta_over_pi,sign")
    for family, items in (("symmetric", modes.symmetric), ("antisymmetric", modes.antisymmetric)):
        for m in items:
            print(f"{family},{m.n},{m.theta!r},{m.theta / math.pi!r},{m.sign:+d}")


def cmd_couplings(args):
    config = configuration(merged_params(args))
    params = collective_params(config.pair, config.mode)
    print(f"omega12={params.omega12!r}")
    print(f"gamma12={params.gamma12!r}")
    print(f"u_split={params.u_split!r}")
    print(f"cos2_alpha={params.cos_sq_alpha!r}")


def cmd_reproduce(args):
    spec = preset(args.figure_name)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    result = run_sweep(spec, workers=args.workers)
    style = result.metadata["style"]
    write_csv(result, out / f"{spec.name}.csv")
    render_svg(result, style, out / f"{spec.name}.svg")
    if not args.no_figure:
        from .figures import render_figure
        render_figure(result, style, out / f"{spec.name}.png")
    print(out / f"{spec.name}.csv")


COMMANDS = {
    "angular": cmd_angular, "detuning": cmd_detuning, "contrast": cmd_contrast,
    "modes": cmd_modes, "couplings": cmd_couplings, "reproduce": cmd_reproduce,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except (ConfigError, SweepError, ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        print(f"nanoantenna: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
