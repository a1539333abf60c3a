"""Truncated local orthogonal observables (TLOOs) and their uncertainty bound.

For a truncation to the lowest n Fock levels, the n^2 observables are the level
projectors |k><k|, the symmetric pair operators (|k><l| + |l><k|)/sqrt(2) and
the antisymmetric pair operators (|k><l| - |l><k|)/(sqrt(2) i), k < l.  They
are orthonormal under the trace inner product and their squares sum to n times
the truncated identity, which forces the variance sum of any state to be at
least (n - 1) times its weight on the truncated levels.

Canonical ordering (fixed so correlation-matrix indices are reproducible):
projectors by ascending level, then symmetric pairs (k, l) in row-major order,
then antisymmetric pairs in the same order.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class TlooSet:
    """Ordered set of the n^2 truncated local orthogonal observables."""

    level: int
    matrices: np.ndarray  # shape (level**2, level, level), complex Hermitian

    def __len__(self) -> int:
        return self.matrices.shape[0]

    def pair_labels(self) -> list[str]:
        """Human-readable labels in canonical order (diagnostics only)."""
        n = self.level
        labels = [f"proj{k}" for k in range(n)]
        labels += [f"sym{k}{l}" for k in range(n) for l in range(k + 1, n)]
        labels += [f"asym{k}{l}" for k in range(n) for l in range(k + 1, n)]
        return labels


@lru_cache(maxsize=None)
def build_tloos(n: int) -> TlooSet:
    """Construct the canonical n-level TLOO set (n >= 2)."""
    if n < 2:
        raise ValueError(f"truncation level must be >= 2, got {n}")
    mats = []
    for k in range(n):
        m = np.zeros((n, n), dtype=complex)
        m[k, k] = 1.0
        mats.append(m)
    for k in range(n):
        for l in range(k + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[k, l] = m[l, k] = 1.0 / _SQRT2
            mats.append(m)
    for k in range(n):
        for l in range(k + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[k, l] = -1.0j / _SQRT2
            m[l, k] = 1.0j / _SQRT2
            mats.append(m)
    stack = np.array(mats)
    stack.setflags(write=False)
    return TlooSet(n, stack)


def expectation_values(state: np.ndarray, tloos: TlooSet) -> np.ndarray:
    """<A_j> for every observable; real for Hermitian input states."""
    state = _check_state(state, tloos)
    vals = np.einsum("ab,jba->j", state, tloos.matrices)
    return vals.real


def uncertainty_sum(state: np.ndarray, tloos: TlooSet) -> tuple[float, float]:
    """Variance sum and its lower bound for a truncated single-mode state.

    Returns (sum of variances, (n - 1) * weight); every physical state
    satisfies sum >= bound, with equality exactly for pure states supported
    inside the truncation.  The state may carry weight below 1 (truncation of
    a larger state).
    """
    state = _check_state(state, tloos)
    weight = float(np.trace(state).real)
    if weight > 1.0 + 1e-9:
        raise ValueError(f"state weight exceeds 1: {weight}")
    total = 0.0
    for mat in tloos.matrices:
        mean = np.einsum("ab,ba->", state, mat).real
        second = np.einsum("ab,ba->", state, mat @ mat).real
        total += second - mean**2
    bound = (tloos.level - 1) * weight
    return float(total), float(bound)


def rotate_tloos(tloos: TlooSet, rotation: np.ndarray) -> TlooSet:
    """Mix the set by an orthogonal n^2 x n^2 matrix: A~_j = sum_l O_jl A_l.

    Orthogonal mixing preserves orthonormality, the completeness sum and the
    sum of squared expectation values on every state.
    """
    rotation = np.asarray(rotation, dtype=float)
    size = len(tloos)
    if rotation.shape != (size, size):
        raise ValueError(f"rotation must be {size}x{size}, got {rotation.shape}")
    if np.abs(rotation.T @ rotation - np.eye(size)).max() > 1e-10:
        raise ValueError("rotation matrix is not orthogonal")
    mixed = np.einsum("jl,lab->jab", rotation, tloos.matrices)
    return TlooSet(tloos.level, mixed)


def _check_state(state: np.ndarray, tloos: TlooSet) -> np.ndarray:
    state = np.asarray(state)
    n = tloos.level
    if state.shape != (n, n):
        raise ValueError(f"state must be {n}x{n} to match the observable set, got {state.shape}")
    return state
