import itertools
from functools import reduce

import numpy as np
import pytest
from scipy.linalg import expm

PHIS = [0.0, np.pi / 7, np.pi / 4, 1.0, np.pi / 2, 3 * np.pi / 4, np.pi]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def jw_ladder(m, phi):
    """Independent oracle: anyonic a_i^dag as dense matrices from Pauli strings.

    Basis index follows descending bitstrings (itertools.product((1, 0), ...)),
    mode 1 leftmost; local qubit basis is (occupied, empty).
    """
    occ = np.array([[1, 0], [0, 0]], dtype=complex)      # n = 1 projector
    raise_ = np.array([[0, 1], [0, 0]], dtype=complex)   # empty -> occupied
    parity = np.diag([-1.0, 1.0]).astype(complex)        # (-1)^n
    eye = np.eye(2, dtype=complex)
    creators = []
    for i in range(m):
        f_dag = reduce(np.kron, [parity] * i + [raise_] + [eye] * (m - i - 1))
        number_below = sum(
            (reduce(np.kron, [eye] * k + [occ] + [eye] * (m - k - 1)) for k in range(i)),
            np.zeros((2 ** m, 2 ** m), dtype=complex))
        string = expm(1j * phi * number_below)
        creators.append(string.conj().T @ f_dag)
    return creators


def bitstrings(m):
    return [tuple(b) for b in itertools.product((1, 0), repeat=m)]
