"""Small dense linear algebra helpers used across modules."""

from __future__ import annotations

import numpy as np


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2


def random_complex(shape, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def hermitize(m: np.ndarray) -> np.ndarray:
    return (m + m.conj().T) / 2


def fro(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def maxabs(m) -> float:
    m = np.asarray(m)
    return float(np.abs(m).max()) if m.size else 0.0


def spectral_norm_hermitian(m: np.ndarray) -> float:
    """2-norm of a Hermitian matrix via its eigenvalues."""
    if m.shape == (1, 1):
        return float(abs(m[0, 0]))
    return float(np.abs(np.linalg.eigvalsh(m)).max())


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Positive square root of a Hermitian PSD matrix, tiny negatives clipped."""
    w, v = np.linalg.eigh(hermitize(m))
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
