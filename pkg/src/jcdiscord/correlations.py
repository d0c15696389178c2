"""Quantum-correlation measures for qubit-qudit (2 (x) N) mixed states.

Implements the closed-form geometric discord

    D_G = (xi_2 + xi_3) / (2N),

where xi_1 >= xi_2 >= xi_3 are the eigenvalues of the real symmetric 3x3
matrix  x x^t + (2/N) T T^t  built from the Bloch decomposition, together
with an independent brute-force oracle (grid minimisation over qubit-side
projective measurements), negativity, the pure-state Schmidt formula and
basic state diagnostics.  All functions are pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from ._golden import golden_min
from .su_bloch import GeneratorBasis, bloch_decompose, su_generators

__all__ = [
    "CorrelationReport",
    "SchmidtSpectrum",
    "StateDiagnostics",
    "check_density_matrix",
    "correlation_report",
    "geometric_discord",
    "geometric_discord_oracle",
    "negativity",
    "pure_state_discord",
    "schmidt_spectrum",
    "state_diagnostics",
]

TRACE_TOL = 1e-8
HERMITICITY_TOL = 1e-10
PSD_TOL = 1e-10  # coherent-state truncation leaves eigenvalues ~ -1e-14


class StateDiagnostics(NamedTuple):
    trace_error: float
    purity: float
    min_eigenvalue: float
    hermiticity_residual: float


@dataclass(frozen=True)
class CorrelationReport:
    """One sample of the correlation measures of a 2 (x) N state."""

    geometric_discord: float
    negativity: float
    purity: float
    trace_error: float


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Squared Schmidt coefficients of a pure bipartite state.

    Coefficients are non-negative and sum to one (within 1e-12); both are
    validated at construction.
    """

    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=float)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("Schmidt spectrum must be a non-empty 1-d array")
        if coeffs.min() < -1e-12:
            raise ValueError(f"negative Schmidt weight {coeffs.min():.3e}")
        total = coeffs.sum()
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"Schmidt spectrum sums to {total!r}, expected 1")
        coeffs = np.clip(coeffs, 0.0, None)
        coeffs.flags.writeable = False
        object.__setattr__(self, "coefficients", coeffs)


def state_diagnostics(rho: np.ndarray) -> StateDiagnostics:
    """Trace error, purity, smallest eigenvalue and Hermiticity residual.

    Diagnostic only; never rejects its input.
    """
    rho = np.asarray(rho, dtype=complex)
    herm = float(np.abs(rho - rho.conj().T).max())
    trace_error = float(abs(np.trace(rho) - 1.0))
    purity = float(np.trace(rho @ rho).real)
    min_eig = float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min())
    return StateDiagnostics(trace_error, purity, min_eig, herm)


def check_density_matrix(
    rho: np.ndarray,
    trace_tol: float = TRACE_TOL,
    herm_tol: float = HERMITICITY_TOL,
    psd_tol: float = PSD_TOL,
) -> np.ndarray:
    """Validate a density matrix; returns it as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    diag = state_diagnostics(rho)
    if diag.hermiticity_residual > herm_tol:
        raise ValueError(f"not Hermitian: residual {diag.hermiticity_residual:.3e}")
    if diag.trace_error > trace_tol:
        raise ValueError(f"trace deviates from 1 by {diag.trace_error:.3e}")
    if diag.min_eigenvalue < -psd_tol:
        raise ValueError(f"not positive semidefinite: min eigenvalue {diag.min_eigenvalue:.3e}")
    return rho


def _split_dims(rho: np.ndarray) -> int:
    dim = rho.shape[0]
    if dim % 2 != 0 or dim < 4:
        raise ValueError(f"expected a qubit times a field of dimension >= 2, got dim {dim}")
    return dim // 2


@lru_cache(maxsize=8)
def _cached_basis(n: int) -> GeneratorBasis:
    return su_generators(n)


def geometric_discord(rho: np.ndarray, basis: GeneratorBasis | None = None) -> float:
    """Closed-form geometric discord of a 2 (x) N density matrix.

    ``basis`` may be supplied to reuse a prebuilt SU(N) generator basis;
    by default a cached basis of the matching dimension is used.  The result
    does not depend on generator ordering.
    """
    rho = check_density_matrix(rho)
    n = _split_dims(rho)
    if basis is None:
        basis = _cached_basis(n)
    elif basis.dim != n:
        raise ValueError(f"basis dimension {basis.dim} does not match field dimension {n}")
    dec = bloch_decompose(rho, basis)
    kmat = np.outer(dec.x, dec.x) + (2.0 / n) * (dec.T @ dec.T.T)
    xi = np.linalg.eigvalsh(kmat)  # ascending
    return max(0.0, float((xi[0] + xi[1]) / (2.0 * n)))


def negativity(rho: np.ndarray) -> float:
    """Sum of |negative eigenvalues| of the qubit-side partial transpose."""
    rho = check_density_matrix(rho)
    n = _split_dims(rho)
    pt = rho.reshape(2, n, 2, n).transpose(2, 1, 0, 3).reshape(2 * n, 2 * n)
    eigs = np.linalg.eigvalsh(pt)
    return max(0.0, -float(eigs[eigs < 0.0].sum()))


def correlation_report(rho: np.ndarray, basis: GeneratorBasis | None = None) -> CorrelationReport:
    """Geometric discord, negativity, purity and trace error of one state."""
    diag = state_diagnostics(rho)
    return CorrelationReport(
        geometric_discord=geometric_discord(rho, basis),
        negativity=negativity(rho),
        purity=diag.purity,
        trace_error=diag.trace_error,
    )


def schmidt_spectrum(psi: np.ndarray) -> SchmidtSpectrum:
    """Squared Schmidt coefficients of a pure 2 (x) N state vector."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.size % 2 != 0 or psi.size < 4:
        raise ValueError(f"pure state must live on 2 (x) N with N >= 2, got length {psi.size}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state vector norm {norm!r} deviates from 1")
    sv = np.linalg.svd(psi.reshape(2, -1), compute_uv=False)
    return SchmidtSpectrum(sv * sv)


def pure_state_discord(spectrum: SchmidtSpectrum) -> float:
    """Geometric discord of a pure state, 1 - sum_i s_i**2."""
    s = spectrum.coefficients
    return max(0.0, float(1.0 - np.dot(s, s)))


def _qubit_projectors(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Rank-1 projector stack |v><v| for Bloch angles (theta, phi)."""
    a = np.cos(0.5 * theta)
    b = np.sin(0.5 * theta) * np.exp(1j * phi)
    v = np.stack([a, b + 0j], axis=-1)
    return v[..., :, None] * v[..., None, :].conj()


def _measured_distances(rho4: np.ndarray, proj: np.ndarray) -> np.ndarray:
    """||rho - Pi(rho)||^2 for a stack of qubit measurement projectors.

    Pi(rho) = sum_i (P_i (x) I) rho (P_i (x) I) with P_1 = proj, P_2 = 1 - proj,
    so rho - Pi(rho) = P rho + rho P - 2 P rho P with atom-side products.
    """
    pr = np.einsum("tab,bncm->tancm", proj, rho4)
    rp = np.einsum("ancm,tcd->tandm", rho4, proj)
    prp = np.einsum("tab,tbndm->tandm", proj, pr)
    diff = pr + rp - 2.0 * prp
    return np.einsum("tancm,tancm->t", diff, diff.conj()).real


def geometric_discord_oracle(rho: np.ndarray, grid: tuple[int, int] = (128, 256)) -> float:
    """Brute-force geometric discord via measurement-grid minimisation.

    Minimises the squared Hilbert-Schmidt distance between ``rho`` and its
    qubit-side projectively measured image over a uniform (theta, phi) grid,
    then refines each angle once with a golden-section search.  Independent
    of the closed-form path; by construction it can never undershoot the
    true minimum.
    """
    rho = check_density_matrix(rho)
    n = _split_dims(rho)
    n_theta, n_phi = int(grid[0]), int(grid[1])
    if n_theta < 64 or n_phi < 64:
        raise ValueError(f"grid resolution {grid} too coarse; need >= 64 points per angle")
    rho4 = rho.reshape(2, n, 2, n)

    thetas = np.linspace(0.0, np.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    tg, pg = np.meshgrid(thetas, phis, indexing="ij")
    tg = tg.ravel()
    pg = pg.ravel()

    best_val = np.inf
    best_idx = 0
    chunk = 8192
    for start in range(0, tg.size, chunk):
        sl = slice(start, start + chunk)
        vals = _measured_distances(rho4, _qubit_projectors(tg[sl], pg[sl]))
        i = int(np.argmin(vals))
        if vals[i] < best_val:
            best_val = float(vals[i])
            best_idx = start + i
    theta0 = float(tg[best_idx])
    phi0 = float(pg[best_idx])

    def value_at(theta: float, phi: float) -> float:
        proj = _qubit_projectors(np.asarray([theta]), np.asarray([phi]))
        return float(_measured_distances(rho4, proj)[0])

    # one golden-section refinement per angle around the grid optimum
    dtheta = np.pi / (n_theta - 1)
    dphi = 2.0 * np.pi / n_phi
    theta1, val_theta = golden_min(
        lambda th: value_at(th, phi0),
        max(0.0, theta0 - dtheta),
        min(np.pi, theta0 + dtheta),
        tol=1e-8,
    )
    _, val_phi = golden_min(
        lambda ph: value_at(theta1, ph),
        phi0 - dphi,
        phi0 + dphi,
        tol=1e-8,
    )
    return min(best_val, val_theta, val_phi)
