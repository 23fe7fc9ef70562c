"""Local invariants and entangling power of two-qubit gates."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import PreconditionError

UNITARY_TOL = 1e-10

_S = 1 / math.sqrt(2)
# Columns: (|00>+|11>)/sqrt2, -i(|00>-|11>)/sqrt2, (|01>-|10>)/sqrt2, -i(|01>+|10>)/sqrt2.
MAGIC = _S * np.array([
    [1, -1j, 0, 0],
    [0, 0, 1, -1j],
    [0, 0, -1, -1j],
    [1, 1j, 0, 0],
], dtype=complex)


@dataclass(frozen=True)
class LocalInvariants:
    g1: complex
    g2: complex

    @property
    def ep(self) -> float:
        """Normalized entangling power, 1 - |G1|."""
        return 1.0 - abs(self.g1)


def _as_unitary(u, tol: float = UNITARY_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise PreconditionError(f"two-qubit gate must be 4x4, got {u.shape}")
    if np.abs(u.conj().T @ u - np.eye(4)).max() > tol:
        raise PreconditionError("matrix is not unitary within tolerance")
    return u


def to_magic_basis(u) -> np.ndarray:
    """Q^dag U Q with Q the magic basis above."""
    u = _as_unitary(u)
    return MAGIC.conj().T @ u @ MAGIC


def local_invariants(u) -> LocalInvariants:
    """G1 = tr^2(M) / (16 det U) and G2 = (tr^2(M) - tr(M^2)) / (4 det U), M = U_B^T U_B."""
    u = _as_unitary(u)
    ub = MAGIC.conj().T @ u @ MAGIC
    m = ub.T @ ub
    det = np.linalg.det(u)
    tr2 = np.trace(m) ** 2
    return LocalInvariants(complex(tr2 / (16 * det)), complex((tr2 - np.trace(m @ m)) / (4 * det)))


def entangling_power(u) -> float:
    return local_invariants(u).ep


def ep_formula(phi: float) -> float:
    """Closed-form entangling power of the encoded anyonic gate: 1 - cos^4(phi/2)."""
    return 1.0 - math.cos(phi / 2) ** 4
