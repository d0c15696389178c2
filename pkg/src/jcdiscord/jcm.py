"""Jaynes-Cummings model in the rotating-wave approximation.

Conventions: hbar = 1 and the atomic transition frequency omega_a sets the
unit system (omega_a = 1 by default), so g, delta and gamma are expressed in
units of omega_a and time in units of 1/omega_a.  The joint basis is ordered
atom-major, {|e>, |g>} (x) {|0>, ..., |N_F - 1>}, with |e> = (1, 0)^t.

Within each excitation manifold span{|e,n>, |g,n+1>} the Hamiltonian has
eigenvalues E_(+/-)^(n) = omega_f (n + 1/2) +/- Omega_n with Rabi frequency
Omega_n = sqrt((delta/2)^2 + g^2 (n+1)), eigenvectors

    |Phi_+^(n)> = sin(theta_n) |e,n> + cos(theta_n) |g,n+1>,
    |Phi_-^(n)> = cos(theta_n) |e,n> - sin(theta_n) |g,n+1>,

and mixing angle tan(theta_n) = 2 g sqrt(n+1) / (-delta + 2 Omega_n); the
one-dimensional ground manifold |g,0> has energy E_0 = -omega_a / 2.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DressedManifold",
    "ModelParams",
    "GROUND",
    "dressed_eigensystem",
    "ground_energy",
    "hamiltonian_matrix",
    "level_energy",
    "mixing_angle",
    "rabi_frequency",
    "transition_frequency",
]

#: Branch label of the one-dimensional ground manifold |g,0>.
GROUND = "0"

_BRANCHES = ("+", "-", GROUND)


@dataclass(frozen=True)
class ModelParams:
    """Atom-field model parameters in units of omega_a.

    delta = omega_a - omega_f is the detuning and gamma >= 0 the intrinsic
    dephasing rate.  Immutable and safe for concurrent reads.
    """

    g: float
    delta: float = 0.0
    gamma: float = 0.0
    omega_a: float = 1.0

    def __post_init__(self):
        if not self.g > 0.0:
            raise ValueError(f"coupling must be positive (degenerate for g = 0), got g={self.g!r}")
        if self.gamma < 0.0:
            raise ValueError(f"dephasing rate must be non-negative, got gamma={self.gamma!r}")
        if not self.omega_a > 0.0:
            raise ValueError(f"atom frequency must be positive, got omega_a={self.omega_a!r}")
        if self.g / self.omega_a > 0.3:
            warnings.warn(
                f"g/omega_a = {self.g / self.omega_a:.3f} strains the rotating-wave "
                "approximation (valid for g << omega_a)",
                stacklevel=2,
            )

    @property
    def omega_f(self) -> float:
        return self.omega_a - self.delta


@dataclass(frozen=True)
class DressedManifold:
    """Dressed eigen-pair of the n-th excitation manifold."""

    n: int
    rabi: float
    theta: float
    e_plus: float
    e_minus: float

    @property
    def ket_plus(self) -> np.ndarray:
        """|Phi_+> in the {|e,n>, |g,n+1>} basis."""
        return np.array([np.sin(self.theta), np.cos(self.theta)])

    @property
    def ket_minus(self) -> np.ndarray:
        """|Phi_-> in the {|e,n>, |g,n+1>} basis."""
        return np.array([np.cos(self.theta), -np.sin(self.theta)])


def _check_index(n) -> None:
    if np.any(np.asarray(n) < 0):
        raise ValueError(f"excitation index must be >= 0, got {n!r}")


def rabi_frequency(n, params: ModelParams):
    """Omega_n = sqrt((delta/2)^2 + g^2 (n+1)); accepts scalar or array n."""
    _check_index(n)
    n = np.asarray(n, dtype=float)
    out = np.sqrt((0.5 * params.delta) ** 2 + params.g**2 * (n + 1.0))
    return float(out) if out.ndim == 0 else out


def mixing_angle(n, params: ModelParams):
    """Manifold mixing angle theta_n, strictly inside (0, pi/2) for g > 0."""
    _check_index(n)
    n = np.asarray(n, dtype=float)
    two_omega = 2.0 * rabi_frequency(n, params)
    out = np.arctan2(2.0 * params.g * np.sqrt(n + 1.0), -params.delta + two_omega)
    return float(out) if out.ndim == 0 else out


def ground_energy(params: ModelParams) -> float:
    """Energy of the uncoupled ground manifold |g,0>."""
    return -0.5 * params.omega_a


def dressed_eigensystem(n: int, params: ModelParams) -> DressedManifold:
    """Dressed energies and eigenvectors of manifold n."""
    _check_index(n)
    omega = rabi_frequency(n, params)
    center = params.omega_f * (n + 0.5)
    return DressedManifold(
        n=int(n),
        rabi=omega,
        theta=mixing_angle(n, params),
        e_plus=center + omega,
        e_minus=center - omega,
    )


def level_energy(branch: str, n: int, params: ModelParams) -> float:
    """Energy of a dressed level; branch is '+', '-' or the ground label '0'."""
    if branch == GROUND:
        return ground_energy(params)
    if branch not in _BRANCHES:
        raise ValueError(f"branch must be one of {_BRANCHES}, got {branch!r}")
    m = dressed_eigensystem(n, params)
    return m.e_plus if branch == "+" else m.e_minus


def transition_frequency(n: int, m: int, alpha: str, beta: str, params: ModelParams) -> float:
    """omega_{alpha beta}^{nm} = E_alpha^(n) - E_beta^(m).

    With beta = '0' this is the ground-referenced frequency omega_alpha^(n).
    """
    return level_energy(alpha, n, params) - level_energy(beta, m, params)


def hamiltonian_matrix(params: ModelParams, n_field: int) -> np.ndarray:
    """Dense RWA Hamiltonian on the truncated space {|e>,|g>} (x) {|0..N_F-1>}.

    Exactly Hermitian; couples |e,n> and |g,n+1> with strength g sqrt(n+1)
    and commutes with the excitation number a^dag a + sigma_z / 2 (the
    truncation removes the top coupling rather than distorting it).
    """
    if not isinstance(n_field, (int, np.integer)) or n_field < 2:
        raise ValueError(f"field truncation must be an integer >= 2, got {n_field!r}")
    n_field = int(n_field)
    levels = np.arange(n_field)
    ham = np.zeros((2 * n_field, 2 * n_field), dtype=complex)
    ham[levels, levels] = 0.5 * params.omega_a + levels * params.omega_f
    ham[n_field + levels, n_field + levels] = -0.5 * params.omega_a + levels * params.omega_f
    for n in range(n_field - 1):
        coupling = params.g * np.sqrt(n + 1.0)
        ham[n, n_field + n + 1] = coupling
        ham[n_field + n + 1, n] = coupling
    return ham
