"""Normalized parameter model of a laser-driven pair of two-level atoms.

Rates and frequencies are measured in units of the mean damping rate
``Gamma0 = (Gamma1 + Gamma2) / 2``; lengths in units of the resonance
wavelength.  With this choice ``gamma1 + gamma2 == 2`` always holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

RATE_SUM_TOL = 1e-12


class ConfigError(ValueError):
    """Raised when a configuration violates one or more physical invariants."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class AtomPair:
    gamma1: float = 1.0
    gamma2: float = 1.0
    delta: float = 0.0
    separation: float = 0.25
    dipole_axis_angle: float = math.pi / 2
    # Gamma0 expressed in whatever raw units the rates were supplied in.
    rate_unit: float = 1.0

    @classmethod
    def from_rates(cls, rate1, rate2, **kwargs):
        """Build a pair from raw damping rates, rescaling them so they sum to 2.

        Only the rates are rescaled; ``delta`` and the other keyword
        arguments are taken to be in units of the mean rate already.
        """
        if rate1 <= 0 or rate2 <= 0:
            raise ConfigError(["non-positive damping rate"])
        gamma0 = 0.5 * (rate1 + rate2)
        return cls(gamma1=rate1 / gamma0, gamma2=rate2 / gamma0,
                   rate_unit=gamma0, **kwargs)

    def to_rates(self):
        return self.gamma1 * self.rate_unit, self.gamma2 * self.rate_unit

    @property
    def gamma(self):
        """Normalized damping-rate difference, ``(Gamma1 - Gamma2) / (Gamma1 + Gamma2)``."""
        return 0.5 * (self.gamma1 - self.gamma2)

    @property
    def kr12(self):
        return 2.0 * math.pi * self.separation

    @property
    def cos_dipole_axis(self):
        return math.cos(self.dipole_axis_angle)


@dataclass(frozen=True)
class Drive:
    rabi: float = 0.2
    detuning_l: float = 0.0
    propagation_angle: float = math.pi / 2
    initial_phase: float = 0.0

    def local_rabi(self, pair):
        """Complex Rabi frequencies at the two atom positions (x = -r12/2, +r12/2)."""
        phase = pair.kr12 * math.cos(self.propagation_angle)
        om1 = self.rabi * np.exp(1j * (self.initial_phase - 0.5 * phase))
        om2 = self.rabi * np.exp(1j * (self.initial_phase + 0.5 * phase))
        return complex(om1), complex(om2)

    def mean_rabi(self, pair):
        om1, om2 = self.local_rabi(pair)
        return 0.5 * (om1 + om2)

    def atom_detunings(self, pair):
        """Per-atom detunings ``(Delta1, Delta2)`` from the laser frequency."""
        return (self.detuning_l + 0.5 * pair.delta,
                self.detuning_l - 0.5 * pair.delta)


@dataclass(frozen=True)
class CouplingMode:
    """How the dipole-dipole shift and collective damping are obtained.

    ``independent`` forces both to zero, ``interacting`` computes them from
    the geometry, ``custom`` takes the given values.
    """

    kind: str = "interacting"
    omega12: float = 0.0
    gamma12: float = 0.0

    KINDS = ("independent", "interacting", "custom")

    @classmethod
    def independent(cls):
        return cls("independent")

    @classmethod
    def interacting(cls):
        return cls("interacting")

    @classmethod
    def custom(cls, omega12, gamma12):
        return cls("custom", float(omega12), float(gamma12))


@dataclass(frozen=True)
class Configuration:
    pair: AtomPair = field(default_factory=AtomPair)
    drive: Drive = field(default_factory=Drive)
    mode: CouplingMode = field(default_factory=CouplingMode.independent)


def problems(pair, drive, mode):
    """Return a list of human-readable invariant violations (empty if valid)."""
    found = []
    values = {
        "gamma1": pair.gamma1, "gamma2": pair.gamma2, "delta": pair.delta,
        "separation": pair.separation, "dipole_axis_angle": pair.dipole_axis_angle,
        "rabi": drive.rabi, "detuning_l": drive.detuning_l,
        "propagation_angle": drive.propagation_angle,
        "initial_phase": drive.initial_phase,
        "omega12": mode.omega12, "gamma12": mode.gamma12,
    }
    for name, value in values.items():
        if not math.isfinite(value):
            found.append(f"{name} is not finite")
    if pair.gamma1 <= 0 or pair.gamma2 <= 0:
        found.append("non-positive damping rate")
    elif abs(pair.gamma1 + pair.gamma2 - 2.0) > RATE_SUM_TOL:
        found.append("damping rates not normalized (gamma1 + gamma2 must equal 2)")
    if pair.separation <= 0:
        found.append("non-positive separation")
    if drive.rabi < 0:
        found.append("negative Rabi frequency")
    if mode.kind not in CouplingMode.KINDS:
        found.append(f"unknown coupling mode {mode.kind!r}")
    elif mode.kind == "custom" and pair.gamma1 > 0 and pair.gamma2 > 0:
        if abs(mode.gamma12) > math.sqrt(pair.gamma1 * pair.gamma2) + RATE_SUM_TOL:
            found.append("unphysical gamma12: |gamma12| exceeds sqrt(gamma1*gamma2)")
    return found


def validate(pair, drive=None, mode=None):
    """Check a configuration and return it bundled, or raise :class:`ConfigError`."""
    drive = drive if drive is not None else Drive()
    mode = mode if mode is not None else CouplingMode.independent()
    found = problems(pair, drive, mode)
    if found:
        raise ConfigError(found)
    return Configuration(pair, drive, mode)
