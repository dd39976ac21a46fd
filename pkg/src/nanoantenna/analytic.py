"""Closed-form steady state of two independent driven atoms.

Used both as a fast engine for non-interacting atoms and as the exact
reference for the master-equation pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .observables import Correlations

GEOMETRY_TOL = 1e-12


class UnsupportedGeometry(ValueError):
    pass


@dataclass(frozen=True)
class SingleAtomSolution:
    population: float
    coherence: complex  # <S^+>
    denominator: float


def single_atom(rabi, gamma, detuning):
    """Steady state of one driven two-level atom.

    ``rabi`` may be complex (local laser phase).  The coherence is <S^+> in
    the same rotating frame as :func:`nanoantenna.dynamics.build_hamiltonian`;
    for a real Rabi frequency at resonance it is purely imaginary.
    """
    if not gamma > 0:
        raise ValueError("damping rate must be positive")
    rabi = complex(rabi)
    d = 2 * abs(rabi) ** 2 + gamma**2 + 4 * detuning**2
    coherence = 1j * rabi.conjugate() * (gamma + 2j * detuning) / d
    return SingleAtomSolution(abs(rabi) ** 2 / d, coherence, d)


def factorized_correlations(pair, drive):
    """Pair correlations of independent atoms, <S1^+ S2^-> = <S1^+><S2^->."""
    om1, om2 = drive.local_rabi(pair)
    d1, d2 = drive.atom_detunings(pair)
    a1 = single_atom(om1, pair.gamma1, d1)
    a2 = single_atom(om2, pair.gamma2, d2)
    c12 = a1.coherence * a2.coherence.conjugate()
    return Correlations(a1.population, a2.population, c12, c12.conjugate())


def _drive_phase(pair, drive):
    """Interference phase shift imposed by the laser: 0 or +-pi/2."""
    phase = pair.kr12 * math.cos(drive.propagation_angle)
    for allowed in (0.0, 0.5 * math.pi, -0.5 * math.pi):
        if abs(phase - allowed) < GEOMETRY_TOL:
            return allowed
    raise UnsupportedGeometry(
        "closed form needs the laser along a symmetric (k r12 cos theta_L = 0) or "
        f"antisymmetric (+-pi/2) mode; got k r12 cos theta_L = {phase!r}")


def intensity_independent(pair, drive, theta):
    """Steady-state intensity of independent atoms at angle(s) ``theta``.

    For a laser along an antisymmetric mode the interference argument is
    shifted by the laser phase difference, which swaps the cosine and sine
    fringes.
    """
    shift = _drive_phase(pair, drive)
    g = pair.gamma
    om = drive.rabi
    dl, dd = drive.detuning_l, pair.delta
    d1 = 2 * om**2 + pair.gamma1**2 + 4 * (dl + dd / 2) ** 2
    d2 = 2 * om**2 + pair.gamma2**2 + 4 * (dl - dd / 2) ** 2
    x = pair.kr12 * np.cos(np.asarray(theta, dtype=float)) + shift
    root = math.sqrt(1 - g * g)
    cos_amp = 4 * dl**2 - dd**2 + (1 - g * g)
    sin_amp = 2 * (2 * g * dl - dd)
    fringe = 2 * root * (cos_amp * np.cos(x) + sin_amp * np.sin(x))
    return om**2 / (d1 * d2) * ((1 + g) * d2 + (1 - g) * d1 + fringe)


def intensity_two_identical_half_wave(rabi, detuning_l, delta, theta):
    """Specialization to equal damping rates and half-wavelength separation."""
    d1 = 2 * rabi**2 + 1 + 4 * (detuning_l + delta / 2) ** 2
    d2 = 2 * rabi**2 + 1 + 4 * (detuning_l - delta / 2) ** 2
    x = math.pi * np.cos(np.asarray(theta, dtype=float))
    return 2 * rabi**2 / (d1 * d2) * (
        (2 * rabi**2 + 1 + 4 * detuning_l**2 + delta**2)
        + (4 * detuning_l**2 - delta**2 + 1) * np.cos(x)
        - 2 * delta * np.sin(x))


def sine_amplitude_sign(pair, drive):
    """Sign of the sine-fringe amplitude 2*gamma*Delta_L - Delta."""
    return int(np.sign(2 * pair.gamma * drive.detuning_l - pair.delta))


def routing_threshold(pair):
    """Laser detuning at which the sine amplitude changes sign (None if gamma == 0)."""
    if pair.gamma == 0:
        return None
    return pair.delta / (2 * pair.gamma)
