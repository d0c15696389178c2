"""Closed-form intrinsic-dephasing evolution of the atom-field state.

The dynamics follow the pure-dephasing master equation

    d rho / dt = -i [H, rho] - (gamma / 2) [H, [H, rho]],

whose solution is diagonal in the dressed basis: every dressed matrix
element |a><b| of the initial state is multiplied by

    exp(-i w t - (gamma t / 2) w^2),        w = E_a - E_b,

so populations are conserved and dressed coherences decay at a rate
proportional to the squared energy gap.  For a product initial state
(atom mixed with excited weight p, field pure with Fock coefficients b_n)
the evolved state takes the blocked form

    rho(t) = [[ee(t), eg(t)], [eg(t)^dag, gg(t)]]

with field-space blocks assembled from six closed-form element families
(excited- and ground-seeded contributions to each block).  Everything here
is evaluated in closed form; no integrator is involved, and evaluations at
distinct times are independent and safe to run concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import jcm
from .jcm import ModelParams

__all__ = [
    "BlockedState",
    "CoherentState",
    "FieldInitSpec",
    "InitialState",
    "NumberState",
    "TruncationError",
    "DEGENERACY_TOL",
    "dephasing_projection",
    "evolve_general",
    "evolve_number",
    "field_initial_coefficients",
    "master_equation_residual",
    "steady_state_general",
    "steady_state_number",
]

#: Residual probability mass allowed beyond the field truncation.
TAIL_TOL = 1e-8

#: Transition frequencies below this magnitude count as degenerate and are
#: kept by the steady-state projection.
DEGENERACY_TOL = 1e-12

_REQUIRED_DIM_CAP = 4096


class TruncationError(ValueError):
    """Field truncation too small for the requested initial state."""

    def __init__(self, message: str, required_dim: int | None = None):
        super().__init__(message)
        self.required_dim = required_dim


def _poisson_tail(mean: float, dim: int) -> tuple[float, int]:
    """Tail mass beyond ``dim`` levels and the dimension that would suffice."""
    log_mean = math.log(mean)
    total = 0.0
    required = None
    for n in range(_REQUIRED_DIM_CAP):
        total += math.exp(-mean + n * log_mean - math.lgamma(n + 1))
        if required is None and 1.0 - total <= TAIL_TOL:
            required = n + 1
        if n + 1 == dim:
            tail = 1.0 - total
        if required is not None and n + 1 >= dim:
            break
    else:
        raise TruncationError(f"coherent amplitude |alpha|^2 = {mean} too large to truncate")
    return tail, required


@dataclass(frozen=True)
class NumberState:
    """Field initially in the Fock state |k>.

    ``dim`` is the field truncation used by the general evolver; it must
    leave room for the |k+1> level and defaults to k + 2.
    """

    k: int
    dim: int | None = None

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or self.k < 0:
            raise ValueError(f"Fock index must be an integer >= 0, got {self.k!r}")
        if self.dim is not None and self.dim < self.k + 2:
            raise TruncationError(
                f"field dimension {self.dim} cannot hold |{self.k + 1}>; need >= {self.k + 2}",
                required_dim=self.k + 2,
            )

    @property
    def n_field(self) -> int:
        return self.dim if self.dim is not None else self.k + 2

    def label(self) -> str:
        return f"number:{self.k}"


@dataclass(frozen=True)
class CoherentState:
    """Field initially in a coherent state of given modulus and phase.

    The truncation must capture all but TAIL_TOL of the Poissonian photon
    number distribution; that is checked at construction time.
    """

    modulus: float
    phase: float = 0.0
    dim: int = 30

    def __post_init__(self):
        if self.modulus < 0.0:
            raise ValueError(f"coherent modulus must be >= 0, got {self.modulus!r}")
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 2:
            raise ValueError(f"field dimension must be an integer >= 2, got {self.dim!r}")
        if self.modulus > 0.0:
            tail, required = _poisson_tail(self.modulus**2, self.dim)
            if tail > TAIL_TOL:
                raise TruncationError(
                    f"truncation at {self.dim} leaves tail mass {tail:.3e} > {TAIL_TOL}; "
                    f"need dim >= {required}",
                    required_dim=required,
                )

    @property
    def n_field(self) -> int:
        return self.dim

    def label(self) -> str:
        if self.phase:
            return f"coherent:{self.modulus!r},{self.phase!r}"
        return f"coherent:{self.modulus!r}"


FieldInitSpec = Union[NumberState, CoherentState]


@dataclass(frozen=True)
class InitialState:
    """Product initial state: atom mixed with excited weight p, field pure."""

    p: float
    field: FieldInitSpec

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"excited-state population must lie in [0, 1], got {self.p!r}")


def field_initial_coefficients(spec: FieldInitSpec) -> np.ndarray:
    """Fock coefficients b_n of the initial field state, length spec.n_field."""
    dim = spec.n_field
    if isinstance(spec, NumberState):
        coeffs = np.zeros(dim, dtype=complex)
        coeffs[spec.k] = 1.0
        return coeffs
    if spec.modulus == 0.0:
        coeffs = np.zeros(dim, dtype=complex)
        coeffs[0] = 1.0
        return coeffs
    n = np.arange(dim)
    log_mod = math.log(spec.modulus)
    lgam = np.array([math.lgamma(i + 1.0) for i in range(dim)])
    amp = np.exp(-0.5 * spec.modulus**2 + n * log_mod - 0.5 * lgam)
    return amp * np.exp(1j * spec.phase * n)


@dataclass(frozen=True)
class BlockedState:
    """Atom-blocked form of the joint state at one instant.

    ``ee`` and ``gg`` are the Hermitian field blocks <e|rho|e> and <g|rho|g>;
    ``eg`` is the coherence block <e|rho|g>.  ``t`` is the evaluation time
    (math.inf for steady states).  Immutable.
    """

    ee: np.ndarray
    gg: np.ndarray
    eg: np.ndarray
    t: float

    def __post_init__(self):
        for name in ("ee", "gg", "eg"):
            arr = getattr(self, name)
            arr.flags.writeable = False

    @property
    def n_field(self) -> int:
        return self.ee.shape[0]

    def trace(self) -> float:
        return float((np.trace(self.ee) + np.trace(self.gg)).real)

    def to_matrix(self) -> np.ndarray:
        """Assemble the dense 2 N_F x 2 N_F density matrix."""
        return np.block([[self.ee, self.eg], [self.eg.conj().T, self.gg]])


def _decay_phase(omega: np.ndarray, t: float, gamma: float) -> np.ndarray:
    """Dressed-coherence factor exp(-i w t - (gamma t / 2) w^2)."""
    return np.exp(-1j * omega * t - 0.5 * gamma * t * omega * omega)


def _manifold_tables(params: ModelParams, n_field: int):
    """Dressed energies/angles for manifolds -1 .. n_field-1 (slot j+1 <-> j).

    Slot 0 is the one-dimensional ground manifold: both branch energies equal
    E_0 and the angle is 0, so formulas that reference manifold -1 through a
    cos^2/sin^2 pair automatically collapse onto the |g,0> dressed state.
    """
    n = np.arange(n_field, dtype=float)
    omega = jcm.rabi_frequency(n, params)
    center = params.omega_f * (n + 0.5)
    e0 = jcm.ground_energy(params)
    e_plus = np.concatenate([[e0], center + omega])
    e_minus = np.concatenate([[e0], center - omega])
    theta = np.concatenate([[0.0], jcm.mixing_angle(n, params)])
    return e_plus, e_minus, theta


def evolve_general(init: InitialState, params: ModelParams, t: float) -> BlockedState:
    """Evolved blocked state for an arbitrary pure initial field state.

    Every element is a finite sum of dressed-coherence factors; terms that
    would reference Fock coefficients outside the truncation contribute
    zero, and the stationary |g,0> weight (1-p) |b_0|^2 appears in gg(0,0).
    """
    if t < 0.0:
        raise ValueError(f"time must be >= 0, got {t!r}")
    b = field_initial_coefficients(init.field)
    nf = b.size
    e_plus, e_minus, theta = _manifold_tables(params, nf)
    gamma = params.gamma

    def phases(row_e: np.ndarray, col_e: np.ndarray) -> np.ndarray:
        return _decay_phase(row_e[:, None] - col_e[None, :], t, gamma)

    # manifold slices: rows/cols of ee use manifolds 0..nf-1, the shifted
    # (n-1, m-1) references of gg/eg use manifolds -1..nf-2
    ep_a, em_a, th_a = e_plus[1:], e_minus[1:], theta[1:]
    ep_b, em_b, th_b = e_plus[:-1], e_minus[:-1], theta[:-1]
    s2a, c2a, sin2a = np.sin(th_a) ** 2, np.cos(th_a) ** 2, np.sin(2.0 * th_a)
    s2b, c2b, sin2b = np.sin(th_b) ** 2, np.cos(th_b) ** 2, np.sin(2.0 * th_b)

    bb = np.outer(b, b.conj())
    b_up = np.concatenate([b[1:], [0.0]])  # b_{n+1}
    b_dn = np.concatenate([[0.0], b[:-1]])  # b_{n-1}

    fpp = phases(ep_a, ep_a)
    fpm = phases(ep_a, em_a)
    fmp = phases(em_a, ep_a)
    fmm = phases(em_a, em_a)
    ee_exc = bb * (
        s2a[:, None] * (s2a[None, :] * fpp + c2a[None, :] * fpm)
        + c2a[:, None] * (s2a[None, :] * fmp + c2a[None, :] * fmm)
    )
    ee_gnd = 0.25 * np.outer(b_up, b_up.conj()) * np.outer(sin2a, sin2a) * (fpp - fpm - fmp + fmm)

    gpp = phases(ep_b, ep_b)
    gpm = phases(ep_b, em_b)
    gmp = phases(em_b, ep_b)
    gmm = phases(em_b, em_b)
    gg_exc = 0.25 * np.outer(b_dn, b_dn.conj()) * np.outer(sin2b, sin2b) * (gpp - gpm - gmp + gmm)
    gg_gnd = bb * (
        c2b[:, None] * (c2b[None, :] * gpp + s2b[None, :] * gpm)
        + s2b[:, None] * (c2b[None, :] * gmp + s2b[None, :] * gmm)
    )

    hpp = phases(ep_a, ep_b)
    hpm = phases(ep_a, em_b)
    hmp = phases(em_a, ep_b)
    hmm = phases(em_a, em_b)
    eg_exc = (
        0.5
        * np.outer(b, b_dn.conj())
        * sin2b[None, :]
        * (s2a[:, None] * (hpp - hpm) + c2a[:, None] * (hmp - hmm))
    )
    eg_gnd = (
        0.5
        * np.outer(b_up, b.conj())
        * sin2a[:, None]
        * (c2b[None, :] * (hpp - hmp) + s2b[None, :] * (hpm - hmm))
    )

    p = init.p
    return BlockedState(
        ee=p * ee_exc + (1.0 - p) * ee_gnd,
        gg=p * gg_exc + (1.0 - p) * gg_gnd,
        eg=p * eg_exc + (1.0 - p) * eg_gnd,
        t=float(t),
    )


def _number_closed_forms(k: int, params: ModelParams, t: float) -> tuple[float, float, complex]:
    """(A_k, B_k, C_k) population/coherence closed forms at time t."""
    omega = jcm.rabi_frequency(k, params)
    om2 = omega * omega
    delta = params.delta
    gk = params.g * math.sqrt(k + 1.0)
    envelope = math.exp(-2.0 * params.gamma * t * om2)
    osc = math.cos(2.0 * omega * t) * envelope
    a_k = 0.25 * (2.0 + delta**2 / (2.0 * om2) + (2.0 - delta**2 / (2.0 * om2)) * osc)
    b_k = gk * gk / (2.0 * om2) * (1.0 - osc)
    c_k = (gk / (4.0 * omega)) * (
        (delta / omega) * (1.0 - osc) + 2.0j * math.sin(2.0 * omega * t) * envelope
    )
    return a_k, b_k, c_k


def _number_steady_forms(k: int, params: ModelParams) -> tuple[float, float, float]:
    """Long-time limits (A_k, B_k, C_k); A + B = 1 exactly."""
    omega = jcm.rabi_frequency(k, params)
    om2 = omega * omega
    delta = params.delta
    gk2 = params.g**2 * (k + 1.0)
    a_k = 0.25 * (2.0 + delta**2 / (2.0 * om2))
    b_k = gk2 / (2.0 * om2)
    c_k = params.g * delta * math.sqrt(k + 1.0) / (4.0 * om2)
    return a_k, b_k, c_k


def _assemble_number(k: int, p: float, abc_k, abc_km1) -> np.ndarray:
    """6x6 layout on {|e>,|g>} (x) {|k-1>,|k>,|k+1>}; |k-1> is a structural
    zero slot when k = 0 and the stationary |g,0> weight enters as (1-p)."""
    a_k, b_k, c_k = abc_k
    a_m, b_m, c_m = abc_km1
    rho = np.zeros((6, 6), dtype=complex)
    rho[0, 0] = (1.0 - p) * b_m
    rho[1, 1] = p * a_k
    rho[0, 4] = -(1.0 - p) * c_m
    rho[4, 0] = np.conj(rho[0, 4])
    rho[1, 5] = p * c_k
    rho[5, 1] = np.conj(rho[1, 5])
    rho[4, 4] = (1.0 - p) * (a_m + (1.0 if k == 0 else 0.0))
    rho[5, 5] = p * b_k
    return rho


def evolve_number(k: int, p: float, params: ModelParams, t: float) -> np.ndarray:
    """Evolved 6x6 state for a field starting in |k>, atom weight p excited."""
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"Fock index must be an integer >= 0, got {k!r}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"excited-state population must lie in [0, 1], got {p!r}")
    if t < 0.0:
        raise ValueError(f"time must be >= 0, got {t!r}")
    abc_k = _number_closed_forms(k, params, t)
    abc_km1 = _number_closed_forms(k - 1, params, t) if k >= 1 else (0.0, 0.0, 0.0)
    return _assemble_number(k, p, abc_k, abc_km1)


def steady_state_number(k: int, p: float, params: ModelParams) -> np.ndarray:
    """Asymptotic 6x6 state for a field starting in |k>; requires gamma > 0."""
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"Fock index must be an integer >= 0, got {k!r}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"excited-state population must lie in [0, 1], got {p!r}")
    if params.gamma <= 0.0:
        raise ValueError("no steady state exists for gamma = 0 (unitary evolution)")
    abc_k = _number_steady_forms(k, params)
    abc_km1 = _number_steady_forms(k - 1, params) if k >= 1 else (0.0, 0.0, 0.0)
    return _assemble_number(k, p, abc_k, abc_km1)


def _dressed_frame(params: ModelParams, n_field: int) -> tuple[np.ndarray, np.ndarray]:
    """Unitary of dressed basis columns and their energies on the truncated
    space: |g,0>, then (Phi_+^(n), Phi_-^(n)) for n = 0..N_F-2, then the
    unpaired top level |e, N_F - 1>."""
    dim = 2 * n_field
    frame = np.zeros((dim, dim), dtype=complex)
    energies = np.zeros(dim)
    frame[n_field, 0] = 1.0
    energies[0] = jcm.ground_energy(params)
    for n in range(n_field - 1):
        man = jcm.dressed_eigensystem(n, params)
        col = 1 + 2 * n
        frame[n, col] = np.sin(man.theta)
        frame[n_field + n + 1, col] = np.cos(man.theta)
        energies[col] = man.e_plus
        frame[n, col + 1] = np.cos(man.theta)
        frame[n_field + n + 1, col + 1] = -np.sin(man.theta)
        energies[col + 1] = man.e_minus
    frame[n_field - 1, dim - 1] = 1.0
    energies[dim - 1] = 0.5 * params.omega_a + (n_field - 1) * params.omega_f
    return frame, energies


def dephasing_projection(
    rho: np.ndarray, params: ModelParams, degeneracy_tol: float = DEGENERACY_TOL
) -> np.ndarray:
    """Project a state onto its dephasing-invariant part.

    Keeps every dressed-basis element whose transition frequency satisfies
    |E_a - E_b| <= degeneracy_tol (the dressed diagonal plus accidental
    degeneracies).  Idempotent.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape[0] % 2 != 0:
        raise ValueError(f"expected a square matrix of even dimension, got shape {rho.shape}")
    n_field = rho.shape[0] // 2
    frame, energies = _dressed_frame(params, n_field)
    dressed = frame.conj().T @ rho @ frame
    keep = np.abs(energies[:, None] - energies[None, :]) <= degeneracy_tol
    return frame @ (dressed * keep) @ frame.conj().T


def steady_state_general(init: InitialState, params: ModelParams) -> BlockedState:
    """Dephasing steady state of a product initial state; requires gamma > 0."""
    if params.gamma <= 0.0:
        raise ValueError("no steady state exists for gamma = 0 (unitary evolution)")
    b = field_initial_coefficients(init.field)
    nf = b.size
    bb = np.outer(b, b.conj())
    rho0 = np.zeros((2 * nf, 2 * nf), dtype=complex)
    rho0[:nf, :nf] = init.p * bb
    rho0[nf:, nf:] = (1.0 - init.p) * bb
    steady = dephasing_projection(rho0, params)
    return BlockedState(
        ee=steady[:nf, :nf].copy(),
        gg=steady[nf:, nf:].copy(),
        eg=steady[:nf, nf:].copy(),
        t=math.inf,
    )


def master_equation_residual(
    init: InitialState, params: ModelParams, t: float, h: float
) -> float:
    """Frobenius defect of the dephasing master equation at time t.

    Compares the central finite difference [rho(t+h) - rho(t-h)] / 2h against
    -i [H, rho(t)] - (gamma/2) [H, [H, rho(t)]] on the truncated space, which
    is exact for number-state inputs (their excitation manifolds are closed).
    """
    if not isinstance(init.field, NumberState):
        raise ValueError(
            "residual check supports number-state inputs only; coherent "
            "truncation makes the boundary manifold inexact"
        )
    if not 0.0 < h < t:
        raise ValueError(f"need t > h > 0, got t={t!r}, h={h!r}")
    nf = init.field.n_field
    ham = jcm.hamiltonian_matrix(params, nf)
    rho_mid = evolve_general(init, params, t).to_matrix()
    rho_plus = evolve_general(init, params, t + h).to_matrix()
    rho_minus = evolve_general(init, params, t - h).to_matrix()
    derivative = (rho_plus - rho_minus) / (2.0 * h)
    comm = ham @ rho_mid - rho_mid @ ham
    generator = -1.0j * comm - 0.5 * params.gamma * (ham @ comm - comm @ ham)
    return float(np.linalg.norm(derivative - generator))
