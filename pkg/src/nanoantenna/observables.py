"""Far-field intensity, its symmetric/antisymmetric decomposition and contrast factors.

Intensities are dimensionless: they are measured in units of the dipole
pattern factor times Gamma0, which is constant for dipoles perpendicular
to the detection plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import S1_MINUS, S1_PLUS, S2_MINUS, S2_PLUS, to_collective

DEFAULT_THETA_POINTS = 721


def theta_grid(count=DEFAULT_THETA_POINTS):
    return np.linspace(0.0, math.pi, count)


@dataclass(frozen=True)
class Correlations:
    """Steady averages <S_i^+ S_j^->; ``c21`` is the complex conjugate of ``c12``."""

    n1: float
    n2: float
    c12: complex
    c21: complex


@dataclass(frozen=True)
class Decomposition:
    i0: float
    ic: float
    is_: float
    ie: float
    psi: float


@dataclass(frozen=True)
class IntensityProfile:
    thetas: np.ndarray
    intensity: np.ndarray
    i0: float
    ic: float
    is_: float
    ie: float
    psi: float


def correlations(rho):
    rho = np.asarray(rho)
    return Correlations(
        n1=float(np.trace(rho @ S1_PLUS @ S1_MINUS).real),
        n2=float(np.trace(rho @ S2_PLUS @ S2_MINUS).real),
        c12=complex(np.trace(rho @ S1_PLUS @ S2_MINUS)),
        c21=complex(np.trace(rho @ S2_PLUS @ S1_MINUS)),
    )


def intensity_from_correlations(corr, pair, theta):
    theta = np.asarray(theta, dtype=float)
    phase = np.exp(1j * pair.kr12 * np.cos(theta))
    cross = math.sqrt(pair.gamma1 * pair.gamma2) * 2.0 * np.real(corr.c12 * phase)
    return pair.gamma1 * corr.n1 + pair.gamma2 * corr.n2 + cross


def intensity(rho, pair, theta):
    """Far-field intensity at observation angle(s) ``theta`` measured from the atomic axis."""
    return intensity_from_correlations(correlations(rho), pair, theta)


def _with_phase(i0, ic, is_):
    if ic == 0.0 and is_ == 0.0:
        return Decomposition(i0, ic, is_, 0.0, 0.0)
    return Decomposition(i0, ic, is_, math.hypot(ic, is_), math.atan2(is_, ic))


def decompose(rho, pair, params):
    """Background, cosine and sine amplitudes from the collective-basis density matrix.

    ``I(theta) = i0 + ic cos(k r12 cos theta) + is_ sin(k r12 cos theta)``
    and ``ie cos(psi) = ic``, ``ie sin(psi) = is_``.
    """
    r = to_collective(rho, params)
    g = pair.gamma
    c2, s2 = params.cos2alpha, params.sin2alpha
    root = math.sqrt(max(0.0, 1.0 - g * g))
    ss, aa, ee = r[1, 1].real, r[2, 2].real, r[3, 3].real
    sa = r[1, 2]
    i0 = 2 * ee + (1 + g * c2) * ss + (1 - g * c2) * aa - 2 * g * s2 * sa.real
    ic = root * ((ss - aa) * s2 + 2 * sa.real * c2)
    is_ = 2 * root * sa.imag
    return _with_phase(float(i0), float(ic), float(is_))


def amplitudes(corr, pair):
    """Same amplitudes as :func:`decompose`, built directly from the correlations."""
    g = pair.gamma
    root = math.sqrt(max(0.0, 1.0 - g * g))
    i0 = (1 + g) * corr.n1 + (1 - g) * corr.n2
    return _with_phase(float(i0), 2 * root * corr.c12.real, -2 * root * corr.c12.imag)


def profile(rho, pair, params, thetas=None):
    thetas = theta_grid() if thetas is None else np.asarray(thetas, dtype=float)
    d = decompose(rho, pair, params)
    return IntensityProfile(thetas, intensity(rho, pair, thetas), d.i0, d.ic, d.is_, d.ie, d.psi)


def contrast_antisymmetric_from(corr, pair):
    d = amplitudes(corr, pair)
    if not d.i0 > 0:
        raise ZeroDivisionError("contrast undefined: no emission (background intensity is zero)")
    return d.is_ / d.i0


def contrast_symmetric_from(corr, pair):
    d = amplitudes(corr, pair)
    if not d.i0 > 0:
        raise ZeroDivisionError("contrast undefined: no emission (background intensity is zero)")
    return d.ic / d.i0


def contrast_antisymmetric(rho, pair):
    """Signed visibility of the sine (antisymmetric-mode) fringe relative to the background."""
    return contrast_antisymmetric_from(correlations(rho), pair)


def contrast_symmetric(rho, pair):
    """Signed visibility of the cosine (symmetric-mode) fringe relative to the background."""
    return contrast_symmetric_from(correlations(rho), pair)


@dataclass(frozen=True)
class Mode:
    theta: float
    n: int
    # +1 where the interference term adds to the intensity (even n), -1 where it subtracts.
    sign: int


@dataclass(frozen=True)
class ModeSet:
    symmetric: tuple
    antisymmetric: tuple

    @property
    def symmetric_angles(self):
        return [m.theta for m in self.symmetric]

    @property
    def antisymmetric_angles(self):
        return [m.theta for m in self.antisymmetric]


def _modes(separation, offset):
    # cos(theta) = (n + offset) / (2 * separation), |cos(theta)| <= 1
    limit = 2.0 * separation
    lo = math.ceil(-limit - offset - 1e-12)
    hi = math.floor(limit - offset + 1e-12)
    modes = []
    for n in range(lo, hi + 1):
        c = (n + offset) / limit
        theta = math.acos(min(1.0, max(-1.0, c)))
        modes.append(Mode(theta, n, 1 if n % 2 == 0 else -1))
    return tuple(sorted(modes, key=lambda m: m.theta))


def mode_angles(separation):
    """Directions of the symmetric and antisymmetric interference modes."""
    if not separation > 0:
        raise ValueError("separation must be positive")
    return ModeSet(_modes(separation, 0.0), _modes(separation, 0.5))
