"""Parameter sweeps over one axis, evaluated with either engine."""

from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import __version__
from .. import analytic, observables as obs
from ..coupling import collective_params
from ..dynamics import build_generator, steady_state
from ..model import AtomPair, Configuration, CouplingMode, validate

AXES = ("theta", "detuning_l", "delta", "separation")
OBSERVABLES = ("intensity", "intensity_total", "profile", "c_antisym", "c_sym",
               "decomposition", "mode_angles")
ENGINES = ("master", "analytic")
PROFILE_POINTS = 13

_PAIR_KEYS = {"delta", "separation", "dipole_axis_angle"}
_DRIVE_KEYS = {"rabi", "detuning_l", "propagation_angle", "initial_phase"}


class SweepError(RuntimeError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    axis: str
    start: float
    stop: float
    count: int
    config: Configuration = field(default_factory=Configuration)
    observables: tuple = ("intensity",)
    engine: str = "master"
    # Each group of angles (radians) yields one intensity column: the sum over the group.
    theta_groups: tuple = ()
    # (label, overrides) pairs; each variant adds one set of columns.
    variants: tuple = ()
    name: str = ""
    title: str = ""
    style: str = ""
    notes: tuple = ()

    def axis_values(self):
        return np.linspace(self.start, self.stop, self.count)


@dataclass
class SweepResult:
    columns: list
    rows: list
    metadata: dict = field(default_factory=dict)

    def column(self, name):
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows])

    @property
    def axis(self):
        return self.columns[0]

    @property
    def data_columns(self):
        return self.columns[1:]


def apply_overrides(config, overrides):
    """Return ``config`` with flat parameter overrides applied.

    Recognized keys: AtomPair and Drive field names, ``rate_ratio``
    (Gamma2/Gamma1, renormalized), ``coupling`` and ``omega12``/``gamma12``.
    """
    pair, drive, mode = config.pair, config.drive, config.mode
    pair_kw = {k: v for k, v in overrides.items() if k in _PAIR_KEYS}
    drive_kw = {k: v for k, v in overrides.items() if k in _DRIVE_KEYS}
    unknown = set(overrides) - _PAIR_KEYS - _DRIVE_KEYS - {
        "rate_ratio", "gamma1", "gamma2", "coupling", "omega12", "gamma12"}
    if unknown:
        raise ValueError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
    if "rate_ratio" in overrides:
        pair = AtomPair.from_rates(1.0, float(overrides["rate_ratio"]),
                                   delta=pair.delta, separation=pair.separation,
                                   dipole_axis_angle=pair.dipole_axis_angle)
    if "gamma1" in overrides or "gamma2" in overrides:
        pair = AtomPair.from_rates(float(overrides.get("gamma1", pair.gamma1)),
                                   float(overrides.get("gamma2", pair.gamma2)),
                                   delta=pair.delta, separation=pair.separation,
                                   dipole_axis_angle=pair.dipole_axis_angle)
    pair = dataclasses.replace(pair, **pair_kw)
    drive = dataclasses.replace(drive, **drive_kw)
    if "coupling" in overrides or "omega12" in overrides or "gamma12" in overrides:
        kind = overrides.get("coupling", mode.kind)
        mode = CouplingMode(kind, float(overrides.get("omega12", mode.omega12)),
                            float(overrides.get("gamma12", mode.gamma12)))
    return validate(pair, drive, mode)


def _at(config, axis, value):
    if axis == "theta":
        return config
    return apply_overrides(config, {axis: float(value)})


def check_spec(spec):
    problems = []
    if spec.axis not in AXES:
        problems.append(f"unknown axis {spec.axis!r}")
    if spec.count < 2:
        problems.append("count must be at least 2")
    if not spec.start < spec.stop:
        problems.append("start must be smaller than stop")
    if not spec.observables:
        problems.append("no observables requested")
    for o in spec.observables:
        if o not in OBSERVABLES:
            problems.append(f"unknown observable {o!r}")
    if spec.engine not in ENGINES:
        problems.append(f"unknown engine {spec.engine!r}")
    needs_angles = {"intensity", "intensity_total"} & set(spec.observables)
    if needs_angles and spec.axis != "theta" and not spec.theta_groups:
        problems.append("intensity on a non-theta axis needs observation angles")
    if problems:
        raise SweepError("; ".join(problems))
    for _, overrides in _variants(spec):
        cfg = apply_overrides(spec.config, overrides)
        if spec.engine == "analytic" and cfg.mode.kind != "independent":
            raise SweepError("analytic engine requires independent atoms")


def _variants(spec):
    return spec.variants if spec.variants else (("", {}),)


def _fmt_angle(theta):
    return f"{theta / math.pi:.4g}pi"


def _columns(spec):
    cols = []
    for o in spec.observables:
        if o == "intensity":
            if spec.axis == "theta":
                cols.append("I")
            else:
                cols.extend("I(" + "+".join(_fmt_angle(t) for t in g) + ")"
                            for g in spec.theta_groups)
        elif o == "intensity_total":
            cols.append("I_total")
        elif o == "profile":
            if spec.axis == "theta":
                cols.append("I")
            else:
                cols.extend(f"I({_fmt_angle(t)})" for t in _profile_angles())
        elif o == "c_antisym":
            cols.append("C_antisym")
        elif o == "c_sym":
            cols.append("C_sym")
        elif o == "decomposition":
            cols.extend(["i0", "ic", "is", "ie", "psi"])
        elif o == "mode_angles":
            cols.extend(["n_symmetric", "n_antisymmetric"])
    return cols


def _profile_angles():
    return np.linspace(0.0, math.pi, PROFILE_POINTS)


def _state(config, engine):
    pair, drive = config.pair, config.drive
    if engine == "analytic":
        return analytic.factorized_correlations(pair, drive), None, None
    params = collective_params(pair, config.mode)
    rho = steady_state(build_generator(pair, drive, params))
    return obs.correlations(rho), rho, params


def _intensity(config, engine, corr, thetas):
    if engine == "analytic":
        return analytic.intensity_independent(config.pair, config.drive, thetas)
    return obs.intensity_from_correlations(corr, config.pair, thetas)


def _values(spec, config, state, theta):
    corr, rho, params = state
    pair = config.pair
    out = []
    for o in spec.observables:
        if o in ("intensity", "profile") and spec.axis == "theta":
            out.append(float(_intensity(config, spec.engine, corr, theta)))
        elif o == "intensity":
            out.extend(float(np.sum(_intensity(config, spec.engine, corr, list(g))))
                       for g in spec.theta_groups)
        elif o == "intensity_total":
            angles = [theta] if spec.axis == "theta" else [t for g in spec.theta_groups for t in g]
            out.append(float(np.sum(_intensity(config, spec.engine, corr, angles))))
        elif o == "profile":
            out.extend(float(v) for v in _intensity(config, spec.engine, corr, _profile_angles()))
        elif o == "c_antisym":
            out.append(obs.contrast_antisymmetric_from(corr, pair))
        elif o == "c_sym":
            out.append(obs.contrast_symmetric_from(corr, pair))
        elif o == "decomposition":
            d = obs.amplitudes(corr, pair) if rho is None else obs.decompose(rho, pair, params)
            out.extend([d.i0, d.ic, d.is_, d.ie, d.psi])
        elif o == "mode_angles":
            modes = obs.mode_angles(pair.separation)
            out.extend([float(len(modes.symmetric)), float(len(modes.antisymmetric))])
    return out


def _evaluate_point(task):
    spec, config, value = task
    try:
        point = _at(config, spec.axis, value)
        return _values(spec, point, _state(point, spec.engine), value)
    except Exception as exc:
        raise SweepError(f"{spec.axis}={float(value)!r}: {exc}") from exc


def _evaluate_column(spec, config, values, workers):
    if spec.axis == "theta":
        try:
            state = _state(config, spec.engine)
        except Exception as exc:
            raise SweepError(f"evaluating state: {exc}") from exc
        return [_values(spec, config, state, t) for t in values]
    tasks = [(spec, config, v) for v in values]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_evaluate_point, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return [_evaluate_point(t) for t in tasks]


def metadata(spec):
    cfg = spec.config
    return {
        "name": spec.name,
        "title": spec.title,
        "version": __version__,
        "engine": spec.engine,
        "axis": spec.axis,
        "grid": {"start": spec.start, "stop": spec.stop, "count": spec.count},
        "observables": list(spec.observables),
        "theta_groups": [list(g) for g in spec.theta_groups],
        "pair": dataclasses.asdict(cfg.pair),
        "drive": dataclasses.asdict(cfg.drive),
        "coupling": dataclasses.asdict(cfg.mode),
        "variants": [[label, dict(o)] for label, o in spec.variants],
        "style": spec.style or ("polar" if spec.axis == "theta" else "cartesian"),
        "notes": list(spec.notes),
    }


def run_sweep(spec, workers=1):
    """Evaluate every requested observable at each point of the sweep axis."""
    check_spec(spec)
    values = spec.axis_values()
    base_cols = _columns(spec)
    columns = [spec.axis]
    per_variant = []
    for label, overrides in _variants(spec):
        config = apply_overrides(spec.config, overrides)
        per_variant.append(_evaluate_column(spec, config, values, workers))
        columns.extend(f"{c} [{label}]" if label else c for c in base_cols)
    rows = []
    for i, v in enumerate(values):
        row = [float(v)]
        for block in per_variant:
            row.extend(block[i])
        if not all(math.isfinite(x) for x in row):
            raise SweepError(f"{spec.axis}={v!r}: non-finite value")
        rows.append(tuple(row))
    return SweepResult(columns, rows, metadata(spec))

