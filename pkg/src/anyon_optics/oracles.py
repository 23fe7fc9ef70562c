"""Independent ground truths at the two classical endpoints.

* phi = 0: free fermions. Every circuit is fixed by its m x m single-particle
  unitary and multi-particle amplitudes are minors of that matrix.
* phi = pi: hard-core bosons, i.e. a qubit chain evolved under XY hopping
  built from Pauli matrices, with no reference to the Jordan-Wigner string.

Neither path touches ``fock`` or ``optics`` internals.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from .exceptions import InvalidArgumentError, ResourceLimitError
from .optics import PHASE_SHIFTER, Circuit

MAX_CHAIN_MODES = 10

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I = np.eye(2, dtype=complex)


def single_particle_matrix(c: Circuit) -> np.ndarray:
    """m x m unitary with entry [y, x] = amplitude for one particle to go x -> y.

    PS_i(theta) is diag(.., e^{i theta}, ..) and BS_ij(theta) embeds
    [[cos, i sin], [i sin, cos]] on rows/columns (i, j). Later elements
    multiply from the left.
    """
    U = np.eye(c.m, dtype=complex)
    for e in c.elements:
        g = np.eye(c.m, dtype=complex)
        if e.kind == PHASE_SHIFTER:
            k = e.modes[0] - 1
            g[k, k] = np.exp(1j * e.theta)
        else:
            i, j = e.modes[0] - 1, e.modes[1] - 1
            co, si = math.cos(e.theta), math.sin(e.theta)
            g[i, i] = g[j, j] = co
            g[i, j] = g[j, i] = 1j * si
        U = g @ U
    return U


def free_fermion_amplitude(U: np.ndarray, x: Sequence[int], y: Sequence[int]) -> complex:
    """<y| U |x> for fermionic Fock states: a minor of the single-particle matrix.

    Rows are the occupied modes of ``y`` and columns those of ``x``, both in
    ascending order.
    """
    if len(x) != U.shape[0] or len(y) != U.shape[0]:
        raise InvalidArgumentError("occupation lengths must match the matrix size")
    cols = [k for k, b in enumerate(x) if b]
    rows = [k for k, b in enumerate(y) if b]
    if len(cols) != len(rows):
        raise InvalidArgumentError(
            f"particle numbers differ: input has {len(cols)}, output has {len(rows)}")
    if not cols:
        return 1.0 + 0j
    return complex(np.linalg.det(U[np.ix_(rows, cols)]))


def _site_operator(op: np.ndarray, site: int, m: int) -> np.ndarray:
    """``op`` on 0-based ``site`` of an m-qubit chain; site 0 is the most significant bit."""
    factors = [_I] * m
    factors[site] = op
    return reduce(np.kron, factors)


def chain_index(bits: Sequence[int]) -> int:
    """Statevector index of an occupation pattern (mode 1 is the leading bit)."""
    return int("".join(str(int(b)) for b in bits), 2) if len(bits) else 0


def hardcore_boson_evolve(c: Circuit, v: np.ndarray) -> np.ndarray:
    """Evolve a 2^m qubit-chain statevector through ``c`` by dense exponentiation.

    Qubit |1> means the mode is occupied. Phase-shifters use the number
    operator (1 - Z)/2 and beam-splitters (X_i X_j + Y_i Y_j)/2, which equals
    s_i^+ s_j^- + s_j^+ s_i^-.
    """
    if c.m > MAX_CHAIN_MODES:
        raise ResourceLimitError(f"qubit chain limited to {MAX_CHAIN_MODES} modes, got {c.m}")
    v = np.asarray(v, dtype=complex)
    if v.shape != (2 ** c.m,):
        raise InvalidArgumentError(f"expected a statevector of length {2 ** c.m}")
    dim = 2 ** c.m
    for e in c.elements:
        if e.kind == PHASE_SHIFTER:
            k = e.modes[0] - 1
            H = (np.eye(dim) - _site_operator(_Z, k, c.m)) / 2
        else:
            i, j = e.modes[0] - 1, e.modes[1] - 1
            H = (_site_operator(_X, i, c.m) @ _site_operator(_X, j, c.m)
                 + _site_operator(_Y, i, c.m) @ _site_operator(_Y, j, c.m)) / 2
        v = expm(1j * e.theta * H) @ v
    return v
