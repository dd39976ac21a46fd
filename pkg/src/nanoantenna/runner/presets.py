"""Parameter sets of the published figures.

Published figure parameters are the source of truth.  Where they leave a
parameter open (sweep range, the discrete curves of a surface plot) the
choice made here is recorded in the preset's notes.
"""

from __future__ import annotations

import math

from ..model import AtomPair, CouplingMode, Drive, validate
from .sweep import SweepSpec

PI = math.pi
THETA_POINTS = 721
DETUNING_POINTS = 401


def _config(separation, rabi=0.2, detuning_l=0.0, delta=0.0, ratio=1.0, coupling="independent"):
    pair = AtomPair.from_rates(1.0, ratio, delta=delta, separation=separation)
    return validate(pair, Drive(rabi=rabi, detuning_l=detuning_l), CouplingMode(coupling))


def _angular(name, title, config, variants, notes=()):
    return SweepSpec("theta", 0.0, PI, THETA_POINTS, config, ("intensity",),
                     variants=variants, name=name, title=title, style="polar", notes=notes)


def _delta_curves(values):
    return tuple((f"delta={v:g}", {"delta": v}) for v in values)


def fig4():
    return _angular(
        "fig4", "Angular distribution, r12 = lambda/4, Delta_L = 0",
        _config(0.25), _delta_curves([0.0, 0.5, -0.5, 20.0]),
        notes=("the delta=20 curve is displayed x100 in the published figure; stored unscaled",))


def fig5():
    return _angular(
        "fig5", "Angular distribution vs laser detuning, r12 = lambda/2, Delta = 2",
        _config(0.5, delta=2.0),
        tuple((f"detuning_l={v:g}", {"detuning_l": v}) for v in (0.0, 0.5, 1.0, 1.5, 2.0, 3.0)),
        notes=("no discrete Delta_L values published; curves sampled at 0, 0.5, 1, 1.5, 2, 3",))


def fig6():
    return _angular("fig6", "Angular distribution, r12 = lambda/2, Delta_L = -0.75",
                    _config(0.5, detuning_l=-0.75), _delta_curves([2.0, -2.0, 0.0]))


def fig9():
    return _angular("fig9", "Angular distribution, r12 = lambda, Delta_L = -0.75",
                    _config(1.0, detuning_l=-0.75), _delta_curves([2.0, -2.0, 0.0]))


def fig10():
    return _angular(
        "fig10", "Angular distribution with interactions, r12 = lambda/2, Delta_L = -0.75",
        _config(0.5, detuning_l=-0.75, coupling="interacting"), _delta_curves([2.0, -2.0, 0.0]),
        notes=("collective couplings computed from geometry: gamma12 = -0.152, omega12 = 0.215",))


def _routing(name, title, separation, groups, coupling, notes=()):
    return SweepSpec("detuning_l", -10.0, 10.0, DETUNING_POINTS,
                     _config(separation, ratio=10.0, coupling=coupling),
                     ("intensity", "intensity_total"), theta_groups=groups,
                     name=name, title=title, style="cartesian",
                     notes=("no Delta_L range published; [-10, 10] used",) + notes)


def fig7():
    return _routing("fig7", "Intensity vs Delta_L at theta = pi/3, 2pi/3 (independent)",
                    0.5, ((PI / 3,), (2 * PI / 3,)), "independent")


def fig12():
    return _routing("fig12", "Intensity vs Delta_L at theta = pi/3, 2pi/3 (interacting)",
                    0.5, ((PI / 3,), (2 * PI / 3,)), "interacting")


def fig13():
    return _routing(
        "fig13", "Intensity vs Delta_L for two mode pairs, r12 = lambda (interacting)",
        1.0, ((0.41 * PI, 0.77 * PI), (0.23 * PI, 0.58 * PI)), "interacting",
        notes=("mode angles rounded as published; exact values are arccos(+-1/4), arccos(+-3/4)",))


def fig8():
    return SweepSpec(
        "detuning_l", -10.0, 10.0, DETUNING_POINTS, _config(0.5), ("c_antisym",),
        variants=(("delta=1, ratio=10", {"delta": 1.0, "rate_ratio": 10.0}),
                  ("delta=0, ratio=10", {"delta": 0.0, "rate_ratio": 10.0}),
                  ("delta=1, ratio=1", {"delta": 1.0, "rate_ratio": 1.0})),
        name="fig8", title="Antisymmetric contrast vs Delta_L, r12 = lambda/2", style="cartesian",
        notes=("no Delta_L range published; [-10, 10] used",))


def fig11():
    return SweepSpec(
        "detuning_l", -5.0, 5.0, DETUNING_POINTS, _config(0.5, delta=2.0), ("c_antisym",),
        variants=(("independent", {"coupling": "independent"}),
                  ("interacting", {"coupling": "interacting"})),
        name="fig11", title="Antisymmetric contrast vs Delta_L, Delta = 2", style="cartesian",
        notes=("no Delta_L range published; [-5, 5] used",))


def fig14():
    return SweepSpec(
        "detuning_l", -15.0, 15.0, 601, _config(0.25), ("c_sym",),
        variants=_delta_curves([0.0, 0.5, 20.0]),
        name="fig14", title="Symmetric contrast vs Delta_L, r12 = lambda/4", style="cartesian",
        notes=("coupling not stated for this figure; independent atoms as in the matching "
               "angular distribution", "no Delta_L range published; [-15, 15] used"))


PRESETS = {f.__name__: f for f in (fig4, fig5, fig6, fig7, fig8, fig9, fig10, fig11, fig12, fig13, fig14)}


def preset(name):
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
