import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import unitary_group

from anyon_optics.encoded import c_phi_reference
from anyon_optics.entangling import MAGIC, ep_formula, local_invariants, to_magic_basis
from anyon_optics.exceptions import PreconditionError

CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


def test_magic_basis_is_unitary():
    assert np.abs(MAGIC.conj().T @ MAGIC - np.eye(4)).max() < 1e-12


def test_magic_identity():
    assert np.abs(to_magic_basis(np.eye(4)) - np.eye(4)).max() < 1e-12


def test_magic_swap():
    ub = to_magic_basis(SWAP)
    assert np.abs(ub - np.diag([1, 1, -1, 1])).max() < 1e-12
    assert np.abs(ub.T @ ub - np.eye(4)).max() < 1e-12
    assert abs(abs(local_invariants(SWAP).g1) - 1) < 1e-12


@pytest.mark.parametrize("seed", range(5))
def test_local_gates_are_orthogonal_in_magic_basis(seed):
    rng = np.random.default_rng(seed)
    a, b = unitary_group.rvs(2, random_state=rng), unitary_group.rvs(2, random_state=rng)
    ub = to_magic_basis(np.kron(a, b))
    m = ub.T @ ub
    assert np.abs(m - m[0, 0] * np.eye(4)).max() < 1e-12


def test_invariant_examples():
    inv = local_invariants(np.eye(4))
    assert abs(inv.g1 - 1) < 1e-12 and abs(inv.g2 - 3) < 1e-12 and abs(inv.ep) < 1e-12
    cnot = local_invariants(CNOT)
    assert abs(cnot.g1) < 1e-12 and abs(cnot.g2 - 1) < 1e-12
    assert abs(cnot.ep - 1) < 1e-12
    swap = local_invariants(SWAP)
    assert abs(swap.g1 + 1) < 1e-12 and abs(swap.g2 + 3) < 1e-12
    assert abs(local_invariants(c_phi_reference(math.pi).encoded_matrix).ep - 1) < 1e-12


def test_rejects_non_unitary():
    with pytest.raises(PreconditionError):
        local_invariants(np.ones((4, 4)))
    with pytest.raises(PreconditionError):
        to_magic_basis(np.eye(3))


def test_ep_formula_values():
    assert ep_formula(0.0) == 0.0
    assert abs(ep_formula(math.pi) - 1) < 1e-12
    assert abs(ep_formula(math.pi / 2) - 0.75) < 1e-12
    assert abs(local_invariants(c_phi_reference(math.pi / 2).encoded_matrix).ep - 0.75) < 1e-12


@pytest.mark.parametrize("phi", np.linspace(0, math.pi, 50))
def test_cphi_entangling_power(phi):
    ep = local_invariants(c_phi_reference(phi).encoded_matrix).ep
    assert abs(ep - ep_formula(phi)) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.floats(0, math.pi))
def test_local_and_swap_invariance(seed, phi):
    rng = np.random.default_rng(seed)
    locals_ = [unitary_group.rvs(2, random_state=rng) for _ in range(4)]
    for u in (c_phi_reference(phi).encoded_matrix, CNOT, unitary_group.rvs(4, random_state=rng)):
        ref = local_invariants(u)
        dressed = np.kron(locals_[0], locals_[1]) @ u @ np.kron(locals_[2], locals_[3])
        for v in (dressed, SWAP @ u @ SWAP):
            inv = local_invariants(v)
            assert abs(inv.g1 - ref.g1) < 1e-10
            assert abs(inv.g2 - ref.g2) < 1e-10


@pytest.mark.parametrize("seed", range(5))
def test_zero_ep_iff_unit_g1_on_local_family(seed):
    rng = np.random.default_rng(seed)
    u = np.kron(unitary_group.rvs(2, random_state=rng), unitary_group.rvs(2, random_state=rng))
    for gate in (u, SWAP, SWAP @ u, np.eye(4)):
        inv = local_invariants(gate)
        assert abs(abs(inv.g1) - 1) < 1e-12
        assert abs(inv.ep) < 1e-12
