"""Shared builders for random states and independent channel oracles."""

import numpy as np

from cvsteer import FockDensity, symplectic_form


def random_orthogonal(rng: np.random.Generator, size: int) -> np.ndarray:
    """Haar-ish orthogonal matrix from the QR factorisation of a Gaussian matrix."""
    q, r = np.linalg.qr(rng.standard_normal((size, size)))
    return q * np.sign(np.diag(r))


def random_mixed_state(rng: np.random.Generator, n: int, weight: float | None = None) -> np.ndarray:
    """Random positive matrix normalised to a (possibly sub-unity) weight."""
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = m @ m.conj().T
    rho /= np.trace(rho).real
    if weight is None:
        weight = rng.uniform(0.2, 1.0)
    return rho * weight


def random_pure_state(rng: np.random.Generator, n: int) -> np.ndarray:
    psi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_real_mixed(rng: np.random.Generator, n: int, weight: float | None = None) -> np.ndarray:
    """Real-symmetric variant for building FockDensity test states."""
    m = rng.standard_normal((n, n))
    rho = m @ m.T
    rho /= np.trace(rho)
    if weight is None:
        weight = rng.uniform(0.2, 1.0)
    return rho * weight


def product_density(rho_a: np.ndarray, rho_b: np.ndarray) -> FockDensity:
    """Two-mode product state supported entirely inside the cutoffs."""
    elements = np.einsum("mn,pq->mpnq", rho_a, rho_b)
    return FockDensity.from_elements(elements)


def loss_dilation(gamma: np.ndarray, eta: float) -> np.ndarray:
    """Loss on mode B via an explicit beamsplitter with a vacuum ancilla.

    Independent of the closed-form channel update: builds the 6x6 symplectic
    beamsplitter on (B, ancilla), applies it to gamma (+) identity and keeps
    the (A, B) block.
    """
    ext = np.eye(6)
    ext[:4, :4] = gamma
    s = np.eye(6)
    c, t = np.sqrt(eta), np.sqrt(1.0 - eta)
    s[2:4, 2:4] = c * np.eye(2)
    s[2:4, 4:6] = t * np.eye(2)
    s[4:6, 2:4] = -t * np.eye(2)
    s[4:6, 4:6] = c * np.eye(2)
    omega = symplectic_form(3)
    assert np.allclose(s @ omega @ s.T, omega)
    return (s @ ext @ s.T)[:4, :4]


def gain_dilation(gamma: np.ndarray, gain: float) -> np.ndarray:
    """Amplification of mode B via a two-mode squeezer with a vacuum ancilla."""
    ext = np.eye(6)
    ext[:4, :4] = gamma
    s = np.eye(6)
    ch, sh = np.sqrt(gain), np.sqrt(gain - 1.0)
    z = np.diag([1.0, -1.0])
    s[2:4, 2:4] = ch * np.eye(2)
    s[2:4, 4:6] = sh * z
    s[4:6, 2:4] = sh * z
    s[4:6, 4:6] = ch * np.eye(2)
    omega = symplectic_form(3)
    assert np.allclose(s @ omega @ s.T, omega)
    return (s @ ext @ s.T)[:4, :4]
