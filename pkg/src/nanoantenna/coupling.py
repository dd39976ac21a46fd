"""Collective couplings of the atom pair and the symmetric/antisymmetric basis."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CollectiveParams:
    omega12: float
    gamma12: float
    u_split: float
    cos2alpha: float
    sin2alpha: float

    @property
    def alpha(self):
        return 0.5 * math.atan2(self.sin2alpha, self.cos2alpha)

    @property
    def cos_sq_alpha(self):
        return 0.5 * (1.0 + self.cos2alpha)


def collective_couplings(pair):
    """Dipole-dipole shift and collective damping ``(omega12, gamma12)`` in units of Gamma0.

    Both dipoles share the orientation set by ``pair.dipole_axis_angle``
    relative to the interatomic axis.
    """
    if not pair.separation > 0:
        raise ValueError(f"collective couplings are singular at separation {pair.separation!r}")
    x = pair.kr12
    c2 = pair.cos_dipole_axis ** 2
    pref = math.sqrt(pair.gamma1 * pair.gamma2)
    sx, cx = math.sin(x), math.cos(x)
    gamma12 = 1.5 * pref * ((1 - c2) * sx / x + (1 - 3 * c2) * (cx / x**2 - sx / x**3))
    omega12 = 0.75 * pref * (-(1 - c2) * cx / x + (1 - 3 * c2) * (sx / x**2 + cx / x**3))
    return omega12, gamma12


def resolve_couplings(pair, mode):
    if mode.kind == "independent":
        return 0.0, 0.0
    if mode.kind == "interacting":
        return collective_couplings(pair)
    if mode.kind == "custom":
        return mode.omega12, mode.gamma12
    raise ValueError(f"unknown coupling mode {mode.kind!r}")


def mixing(pair, omega12, gamma12=0.0):
    """Mixing angle of the single-excitation states for the given dipole-dipole shift.

    At the degenerate point ``U = 0`` the symmetric convention alpha = pi/4 is used.
    """
    u = math.hypot(2.0 * omega12, pair.delta)
    if u == 0.0:
        return CollectiveParams(omega12, gamma12, 0.0, 0.0, 1.0)
    return CollectiveParams(omega12, gamma12, u, pair.delta / u, 2.0 * omega12 / u)


def collective_params(pair, mode):
    omega12, gamma12 = resolve_couplings(pair, mode)
    return mixing(pair, omega12, gamma12)


def collective_basis(params):
    """Unitary whose columns are |g>, |s>, |a>, |e> in the product basis (gg, eg, ge, ee)."""
    a = params.alpha
    c, s = math.cos(a), math.sin(a)
    return np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, c, -s, 0.0],
        [0.0, s, c, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ], dtype=complex)
