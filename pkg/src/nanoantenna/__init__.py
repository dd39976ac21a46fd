"""Driven pair of nonidentical two-level atoms as a directional nano-antenna."""

__version__ = "0.1.0"

from .model import AtomPair, Configuration, ConfigError, CouplingMode, Drive, validate  # noqa: E402
from .coupling import CollectiveParams, collective_couplings, collective_params, mixing  # noqa: E402
from .dynamics import build_generator, build_hamiltonian, evolve, solve, steady_state  # noqa: E402
from .observables import (  # noqa: E402
    contrast_antisymmetric, contrast_symmetric, correlations, decompose, intensity, mode_angles,
)
