"""Rotating-frame master equation of the driven pair and its steady state.

Density matrices are dense 4x4 complex arrays in the product basis
(gg, eg, ge, ee), with atom 1 written first.  Superoperators act on the
column-stacked (Fortran order) vectorization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm, lu_factor, lu_solve

from .coupling import collective_basis, collective_params

DIM = 4


def _ket(i):
    v = np.zeros(DIM, dtype=complex)
    v[i] = 1.0
    return v


GG, EG, GE, EE = (_ket(i) for i in range(DIM))

S1_MINUS = np.outer(GG, EG) + np.outer(GE, EE)
S2_MINUS = np.outer(GG, GE) + np.outer(EG, EE)
S1_PLUS = S1_MINUS.conj().T
S2_PLUS = S2_MINUS.conj().T
S1_Z = 0.5 * (S1_PLUS @ S1_MINUS - S1_MINUS @ S1_PLUS)
S2_Z = 0.5 * (S2_PLUS @ S2_MINUS - S2_MINUS @ S2_PLUS)

IDENTITY = np.eye(DIM, dtype=complex)
TRACE_ROW = IDENTITY.reshape(-1, order="F")


class SteadyStateError(RuntimeError):
    pass


def vec(rho):
    return np.asarray(rho, dtype=complex).reshape(-1, order="F")


def unvec(v):
    return np.asarray(v).reshape(DIM, DIM, order="F")


def left(op):
    """Superoperator of ``rho -> op @ rho``."""
    return np.kron(IDENTITY, op)


def right(op):
    """Superoperator of ``rho -> rho @ op``."""
    return np.kron(op.T, IDENTITY)


def ground_state():
    return np.outer(GG, GG.conj())


def density_matrix_errors(rho):
    """Return (hermiticity error, trace error, minimum eigenvalue)."""
    rho = np.asarray(rho)
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    tr = float(abs(np.trace(rho) - 1.0))
    lam = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
    return herm, tr, lam


def check_density_matrix(rho, herm_tol=1e-12, trace_tol=1e-12, eig_tol=1e-10):
    herm, tr, lam = density_matrix_errors(rho)
    if herm > herm_tol or tr > trace_tol or lam < -eig_tol:
        raise ValueError(
            f"not a density matrix: hermiticity {herm:.3g}, trace error {tr:.3g}, "
            f"min eigenvalue {lam:.3g}")
    return rho


@dataclass(frozen=True, eq=False)
class Generator:
    """Vectorized Lindblad generator together with the Hamiltonian it was built from."""

    matrix: np.ndarray
    hamiltonian: np.ndarray
    label: str = ""

    def apply(self, rho):
        return unvec(self.matrix @ vec(rho))


def build_hamiltonian(pair, drive, collective):
    """Rotating-frame Hamiltonian in units of hbar*Gamma0."""
    d1, d2 = drive.atom_detunings(pair)
    om1, om2 = drive.local_rabi(pair)
    h = d1 * S1_Z + d2 * S2_Z
    h = h + collective.omega12 * (S1_PLUS @ S2_MINUS + S2_PLUS @ S1_MINUS)
    coupling = 0.5 * (om1 * S1_PLUS + om2 * S2_PLUS)
    return h + coupling + coupling.conj().T


def dissipator(rates, jumps):
    """Superoperator of sum_ij rates[i][j] (L_i rho L_j^+ - {L_j^+ L_i, rho}/2)."""
    out = np.zeros((DIM * DIM, DIM * DIM), dtype=complex)
    for i, li in enumerate(jumps):
        for j, lj in enumerate(jumps):
            g = rates[i][j]
            if g == 0:
                continue
            k = lj.conj().T @ li
            out += g * (np.kron(lj.conj(), li) - 0.5 * left(k) - 0.5 * right(k))
    return out


def build_generator(pair, drive, collective):
    h = build_hamiltonian(pair, drive, collective)
    rates = [[pair.gamma1, collective.gamma12], [collective.gamma12, pair.gamma2]]
    matrix = -1j * (left(h) - right(h)) + dissipator(rates, [S1_MINUS, S2_MINUS])
    label = (f"gamma1={pair.gamma1!r}, gamma2={pair.gamma2!r}, delta={pair.delta!r}, "
             f"separation={pair.separation!r}, rabi={drive.rabi!r}, "
             f"detuning_l={drive.detuning_l!r}, omega12={collective.omega12!r}, "
             f"gamma12={collective.gamma12!r}")
    return Generator(matrix, h, label)


def steady_state(gen, rcond_min=1e-13):
    """Unit-trace null vector of the generator.

    One row of the generator is replaced by the trace functional and the
    resulting square system is solved by LU with partial pivoting.
    """
    a = gen.matrix.copy()
    a[0, :] = TRACE_ROW
    b = np.zeros(DIM * DIM, dtype=complex)
    b[0] = 1.0
    # Reciprocal condition number guards against a degenerate stationary manifold.
    rcond = 1.0 / np.linalg.cond(a, p=1)
    if not rcond > rcond_min:
        raise SteadyStateError(f"stationary state is not unique ({gen.label})")
    v = lu_solve(lu_factor(a), b)
    rho = unvec(v)
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def evolve(gen, rho0, t):
    """Propagate ``rho0`` for a time ``t`` (units of 1/Gamma0) with the matrix exponential."""
    if t < 0:
        raise ValueError("evolution time must be non-negative")
    if t == 0:
        return np.array(rho0, dtype=complex)
    return unvec(expm(gen.matrix * t) @ vec(rho0))


def to_collective(rho, params):
    """Density matrix expressed in the (g, s, a, e) basis."""
    u = collective_basis(params)
    return u.conj().T @ rho @ u


def coherence_equation(gen, params):
    """Coefficients of the equation of motion of the s-a coherence <s|rho|a>.

    Returns the coefficients multiplying <s|rho|a>, <s|rho|s>, <a|rho|a> and
    <e|rho|e> in d<s|rho|a>/dt, read off the generator transformed to the
    collective basis.
    """
    u = collective_basis(params)
    w = np.kron(u.T, u.conj().T)
    m = w @ gen.matrix @ w.conj().T

    def idx(row, col):
        return row + DIM * col

    s, a, e = 1, 2, 3
    r = idx(s, a)
    return {
        "sa": m[r, idx(s, a)],
        "ss": m[r, idx(s, s)],
        "aa": m[r, idx(a, a)],
        "ee": m[r, idx(e, e)],
    }


def solve(config):
    """Steady state and collective parameters for a validated configuration."""
    params = collective_params(config.pair, config.mode)
    gen = build_generator(config.pair, config.drive, params)
    return steady_state(gen), params


def spectral_gap(gen):
    """Smallest decay rate among the non-stationary eigenmodes of the generator."""
    ev = np.linalg.eigvals(gen.matrix)
    ev = ev[np.argsort(-ev.real)]
    return -float(ev[1].real) if len(ev) > 1 else math.inf
