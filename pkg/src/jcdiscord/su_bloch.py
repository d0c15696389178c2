"""SU(N) generator bases and the Bloch form of qubit-qudit density matrices.

A density matrix on C^2 (x) C^N is parametrised by an atom coherence vector
``x`` (length 3), a field coherence vector ``y`` (length N^2 - 1) and a
3 x (N^2 - 1) correlation matrix ``T``, taken with respect to the Pauli
matrices on the qubit side and an orthogonal Hermitian generator basis of
SU(N) on the field side:

    rho = (1/2N) (I (x) I + sum_i x_i sigma_i (x) I
                  + I (x) sum_j y_j G_j + sum_ij t_ij sigma_i (x) G_j)

with x_i = Tr[(sigma_i (x) I) rho], y_j = (N/2) Tr[(I (x) G_j) rho] and
t_ij = (N/2) Tr[(sigma_i (x) G_j) rho].

All functions are pure; a ``GeneratorBasis`` is immutable after construction
and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PAULI",
    "GeneratorBasis",
    "BlochDecomposition",
    "su_generators",
    "bloch_decompose",
    "bloch_reconstruct",
]

#: Pauli matrices, stacked in (x, y, z) order.
PAULI = np.array(
    [
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, -1.0j], [1.0j, 0.0]],
        [[1.0, 0.0], [0.0, -1.0]],
    ],
    dtype=complex,
)
PAULI.flags.writeable = False

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-8
IMAG_RESIDUE_TOL = 1e-12


@dataclass(frozen=True)
class GeneratorBasis:
    """Orthogonal Hermitian generator basis of SU(dim).

    ``generators`` is a read-only ``(dim**2 - 1, dim, dim)`` complex array;
    every generator G is traceless and the basis satisfies
    Tr(G_i G_j) = 2 delta_ij.
    """

    dim: int
    generators: np.ndarray

    def __len__(self) -> int:
        return self.generators.shape[0]


@dataclass(frozen=True)
class BlochDecomposition:
    """Coherence vectors and correlation matrix of a 2 (x) N state."""

    x: np.ndarray  # shape (3,)
    y: np.ndarray  # shape (N**2 - 1,)
    T: np.ndarray  # shape (3, N**2 - 1)

    @property
    def field_dim(self) -> int:
        return int(round(np.sqrt(self.y.size + 1)))


def su_generators(dim: int) -> GeneratorBasis:
    """Build the dim**2 - 1 generalized Gell-Mann generators of SU(dim).

    Ordering is fixed for reproducibility: the symmetric off-diagonal pairs
    come first (row-major over index pairs j < k), then the antisymmetric
    pairs in the same order, then the dim - 1 diagonal (Cartan) generators
    normalised so that Tr(G**2) = 2.  For dim = 2 this yields the Pauli
    matrices in (x, y, z) order.

    Dense storage grows as dim**4; dimensions much beyond ~64 are better
    served by a sparse representation and are out of scope here.
    """
    if not isinstance(dim, (int, np.integer)) or dim < 2:
        raise ValueError(f"generator basis needs an integer dimension >= 2, got {dim!r}")
    dim = int(dim)
    mats = np.zeros((dim * dim - 1, dim, dim), dtype=complex)
    pairs = [(j, k) for j in range(dim) for k in range(j + 1, dim)]
    idx = 0
    for j, k in pairs:
        mats[idx, j, k] = 1.0
        mats[idx, k, j] = 1.0
        idx += 1
    for j, k in pairs:
        mats[idx, j, k] = -1.0j
        mats[idx, k, j] = 1.0j
        idx += 1
    for l in range(1, dim):
        scale = np.sqrt(2.0 / (l * (l + 1)))
        mats[idx, :l, :l] = scale * np.eye(l)
        mats[idx, l, l] = -scale * l
        idx += 1
    mats.flags.writeable = False
    return GeneratorBasis(dim=dim, generators=mats)


def _require_state(rho: np.ndarray, field_dim: int) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    expected = 2 * field_dim
    if rho.ndim != 2 or rho.shape != (expected, expected):
        raise ValueError(
            f"state has shape {rho.shape}, expected ({expected}, {expected}) "
            f"for a qubit times a {field_dim}-dimensional field"
        )
    herm = np.abs(rho - rho.conj().T).max()
    if herm > HERMITICITY_TOL:
        raise ValueError(f"state is not Hermitian: max residual {herm:.3e}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"state trace {tr!r} deviates from 1 beyond {TRACE_TOL}")
    return rho


def _as_real(arr: np.ndarray, label: str) -> np.ndarray:
    residue = np.abs(arr.imag).max() if arr.size else 0.0
    if residue > IMAG_RESIDUE_TOL:
        raise ValueError(
            f"{label} has imaginary residue {residue:.3e}; "
            "inputs are inconsistent with a Hermitian state"
        )
    return np.ascontiguousarray(arr.real)


def bloch_decompose(rho: np.ndarray, basis: GeneratorBasis) -> BlochDecomposition:
    """Extract (x, y, T) of a 2 (x) N density matrix in the given basis."""
    n = basis.dim
    rho = _require_state(rho, n)
    rho4 = rho.reshape(2, n, 2, n)
    gens = basis.generators

    x = _as_real(np.einsum("iab,bnan->i", PAULI, rho4), "atom coherence vector")
    # field reduced operator and sigma-contracted field operators
    field_red = rho4[0, :, 0, :] + rho4[1, :, 1, :]
    y = _as_real(0.5 * n * np.einsum("jpq,qp->j", gens, field_red), "field coherence vector")
    s_ops = np.einsum("iab,bnam->inm", PAULI, rho4)
    t = _as_real(0.5 * n * np.einsum("jpq,iqp->ij", gens, s_ops), "correlation matrix")
    x.flags.writeable = False
    y.flags.writeable = False
    t.flags.writeable = False
    return BlochDecomposition(x=x, y=y, T=t)


def bloch_reconstruct(decomp: BlochDecomposition, basis: GeneratorBasis) -> np.ndarray:
    """Assemble the density matrix encoded by a Bloch decomposition.

    Inverse of :func:`bloch_decompose`; the output is Hermitian by
    construction (it is symmetrised against float roundoff).
    """
    n = basis.dim
    m = n * n - 1
    x = np.asarray(decomp.x, dtype=float)
    y = np.asarray(decomp.y, dtype=float)
    t = np.asarray(decomp.T, dtype=float)
    if x.shape != (3,) or y.shape != (m,) or t.shape != (3, m):
        raise ValueError(
            f"decomposition shapes {x.shape}/{y.shape}/{t.shape} do not match "
            f"a basis of dimension {n}"
        )
    gens = basis.generators
    atom = np.einsum("i,iab->ab", x, PAULI)
    field = np.einsum("j,jpq->pq", y, gens)
    corr = np.einsum("ij,iab,jpq->apbq", t, PAULI, gens).reshape(2 * n, 2 * n)
    rho = (
        np.eye(2 * n, dtype=complex)
        + np.kron(atom, np.eye(n))
        + np.kron(np.eye(2), field)
        + corr
    ) / (2.0 * n)
    return 0.5 * (rho + rho.conj().T)
