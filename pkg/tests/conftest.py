import numpy as np
import pytest


def random_density_matrix(rng: np.random.Generator, dim: int, rank: int | None = None) -> np.ndarray:
    """Ginibre-sampled density matrix of the given dimension (and rank)."""
    g = rng.normal(size=(dim, rank or dim)) + 1j * rng.normal(size=(dim, rank or dim))
    m = g @ g.conj().T
    return m / np.trace(m)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_pure_state(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def bell_state(n_field: int) -> np.ndarray:
    """(|e,0> + |g,1>)/sqrt(2) embedded in 2 (x) n_field, as a density matrix."""
    psi = np.zeros(2 * n_field, dtype=complex)
    psi[0] = psi[n_field + 1] = 1.0 / np.sqrt(2.0)
    return np.outer(psi, psi.conj())


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
