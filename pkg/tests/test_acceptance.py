"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line with the measured
value and the pinned tolerance, then asserts. Run with ``pytest -s`` or read
them in the ``-v`` output.
"""

import cmath
import math
import time

import numpy as np
import pytest
from scipy.stats import unitary_group

from anyon_optics.encoded import (
    LogicalLayout,
    c_phi_reference,
    compile_single_qubit,
    cphi_encoded_form,
    logical_unitary,
    zxz_angles,
)
from anyon_optics.entangling import ep_formula, local_invariants
from anyon_optics.fock import AlgebraConfig, FockVector, enumerate_basis, verify_deformed_relations
from anyon_optics.optics import Circuit, OpticalElement, run_circuit
from anyon_optics.oracles import chain_index, free_fermion_amplitude, hardcore_boson_evolve, single_particle_matrix
from anyon_optics.verify import appendix_comparison, check_dual_engine, random_circuit, run_verification

PHI_SET = (0.0, math.pi / 7, math.pi / 4, 1.0, math.pi / 2, 3 * math.pi / 4, math.pi)

TOL_ALGEBRA = 1e-12
MAX_SECONDS_ALGEBRA = 5.0
TOL_EXAMPLE = 1e-12
TOL_DUAL = 1e-10
TOL_APPENDIX = 1e-12
TOL_ENCODED = 1e-10
TOL_FORMULA = 1e-9
TOL_ENDPOINT = 1e-9
TOL_SINGLE = 1e-9
TOL_GENERATOR = 1e-15  # "exact": machine precision, sin(pi) is 1.2e-16
TOL_CONSERVE = 1e-12
MAX_SECONDS_FULL = 60.0

EXPECTED_BS13_ITEMS = {("0110", "1100"), ("1100", "0110"), ("0011", "1001"), ("1001", "0011")}


@pytest.fixture
def report(capsys):
    def emit(number, name, value, limit, ok):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:>2} {name}: {value:.3e} (limit {limit:g})")
        return ok
    return emit


def test_criterion_01_deformed_algebra(report):
    start = time.perf_counter()
    worst = max(verify_deformed_relations(AlgebraConfig(m, phi)).max_violation
                for m in range(1, 6) for phi in PHI_SET)
    seconds = time.perf_counter() - start
    ok = worst < TOL_ALGEBRA and seconds < MAX_SECONDS_ALGEBRA
    report(1, f"deformed algebra, m<=5, 7 phi values ({seconds:.2f}s)", worst, TOL_ALGEBRA, ok)
    assert worst < TOL_ALGEBRA
    assert seconds < MAX_SECONDS_ALGEBRA


def test_criterion_02_worked_example(report):
    s = 1 / math.sqrt(2)
    worst = 0.0
    for phi in np.linspace(0, math.pi, 10):
        c = Circuit(3, float(phi), [OpticalElement.bs(1, 3, math.pi / 4)])
        first = FockVector(3, {(1, 1, 0): s, (0, 1, 1): -1j * cmath.exp(-1j * phi) * s})
        second = FockVector(3, {(1, 1, 0): -1j * cmath.exp(1j * phi) * s, (0, 1, 1): s})
        for engine in ("analytic", "exact"):
            worst = max(worst, run_circuit(c, (1, 1, 0), engine).distance(first),
                        run_circuit(c, (0, 1, 1), engine).distance(second))
    report(2, "BS13(pi/4) on |110>, |011>, 10 phi values", worst, TOL_EXAMPLE, worst < TOL_EXAMPLE)
    assert worst < TOL_EXAMPLE


def test_criterion_03_dual_engine(report):
    check = check_dual_engine(max_m=6, draws=200)
    report(3, f"analytic vs exponential ({check.detail})", check.max_violation, TOL_DUAL,
           check.max_violation < TOL_DUAL)
    assert check.max_violation < TOL_DUAL


def test_criterion_04_appendix_matrices(report):
    rng = np.random.default_rng(4)
    worst = 0.0
    items = set()
    for _ in range(12):
        comp = appendix_comparison(rng.uniform(-np.pi, np.pi), rng.uniform(0.05, np.pi - 0.05))
        worst = max(worst, comp[(1, 2)][0], comp[(2, 3)][0])
        items |= {("".join(map(str, o)), "".join(map(str, i))) for o, i, _, _ in comp[(1, 3)][1]}
    ok = worst < TOL_APPENDIX and items == EXPECTED_BS13_ITEMS
    report(4, f"BS12/BS23 entrywise; BS13 itemized {sorted(items)}", worst, TOL_APPENDIX, ok)
    assert worst < TOL_APPENDIX
    assert items == EXPECTED_BS13_ITEMS


def test_criterion_05_encoded_form(report):
    worst = 0.0
    for phi in np.linspace(0, math.pi, 25):
        gate = c_phi_reference(float(phi))
        worst = max(worst, np.abs(gate.encoded_matrix - cphi_encoded_form(float(phi))).max())
        M = gate.two_particle_matrix
        for k in (0, 5):
            worst = max(worst, np.abs(np.delete(M[:, k], k)).max())
    report(5, "encoded C(phi) form and 1100/0011 eigenstates", worst, TOL_ENCODED, worst < TOL_ENCODED)
    assert worst < TOL_ENCODED


def test_criterion_06_central_formula(report):
    worst = 0.0
    for phi in np.linspace(0, math.pi, 50):
        ep = local_invariants(c_phi_reference(float(phi)).encoded_matrix).ep
        worst = max(worst, abs(ep - ep_formula(float(phi))))
    ep0 = local_invariants(c_phi_reference(0.0).encoded_matrix).ep
    ep_pi = local_invariants(c_phi_reference(math.pi).encoded_matrix).ep
    worst = max(worst, abs(ep0), abs(ep_pi - 1))
    report(6, "1-|G1| vs 1-cos^4(phi/2), 50 points, ep(0)=0, ep(pi)=1", worst, TOL_FORMULA,
           worst < TOL_FORMULA)
    assert worst < TOL_FORMULA


def test_criterion_07_endpoint_oracles(report):
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(25):
        m = int(rng.integers(2, 7))
        c = random_circuit(rng, m, 0.0, int(rng.integers(1, 11)))
        U = single_particle_matrix(c)
        for n in range(min(3, m) + 1):
            basis = enumerate_basis(m, n)
            for x in basis:
                out = run_circuit(c, x)
                worst = max(worst, max(abs(out[y] - free_fermion_amplitude(U, x, y)) for y in basis))
    for _ in range(25):
        m = int(rng.integers(2, 7))
        c = random_circuit(rng, m, math.pi, int(rng.integers(1, 11)))
        for n in range(m + 1):
            for x in enumerate_basis(m, n):
                v = np.zeros(2 ** m, dtype=complex)
                v[chain_index(x)] = 1
                chain = hardcore_boson_evolve(c, v)
                dense = np.zeros(2 ** m, dtype=complex)
                for bits, amp in run_circuit(c, x).items():
                    dense[chain_index(bits)] = amp
                worst = max(worst, np.abs(dense - chain).max())
    report(7, "phi=0 determinants and phi=pi qubit chain", worst, TOL_ENDPOINT, worst < TOL_ENDPOINT)
    assert worst < TOL_ENDPOINT


def test_criterion_08_single_qubit(report):
    rng = np.random.default_rng(8)
    layout = LogicalLayout(1)
    worst = 0.0
    for _ in range(100):
        target = unitary_group.rvs(2, random_state=rng)
        target = target / np.sqrt(np.linalg.det(target))
        U, leak = logical_unitary(compile_single_qubit(zxz_angles(target), 1, layout), layout)
        ov = np.vdot(target, U)
        worst = max(worst, np.abs(U - ov / abs(ov) * target).max(), leak.max())
    exact = 0.0
    for theta in np.linspace(-np.pi, np.pi, 9):
        ps, _ = logical_unitary(Circuit(2, 0.0, [OpticalElement.ps(2, theta)]), layout)
        bs, _ = logical_unitary(Circuit(2, 0.0, [OpticalElement.bs(1, 2, theta)]), layout)
        c, s = math.cos(theta), math.sin(theta)
        exact = max(exact, np.abs(ps - np.diag([1, cmath.exp(1j * theta)])).max(),
                    np.abs(bs - np.array([[c, 1j * s], [1j * s, c]])).max())
    ok = worst < TOL_SINGLE and exact < TOL_GENERATOR
    report(8, f"100 SU(2) targets; generator actions off by {exact:.1e}", worst, TOL_SINGLE, ok)
    assert worst < TOL_SINGLE
    assert exact < TOL_GENERATOR


def test_criterion_09_conservation(report):
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(100):
        m = int(rng.integers(2, 7))
        c = random_circuit(rng, m, rng.uniform(0, np.pi), int(rng.integers(1, 21)))
        x = tuple(int(b) for b in rng.integers(0, 2, size=m))
        out = run_circuit(c, x)
        worst = max(worst, abs(out.norm() - 1.0), 0.0 if out.particle_numbers() <= {sum(x)} else 1.0)
    report(9, "norm and particle number, 100 circuits", worst, TOL_CONSERVE, worst < TOL_CONSERVE)
    assert worst < TOL_CONSERVE


def test_criterion_10_full_suite_runtime(report):
    start = time.perf_counter()
    checks = run_verification("full")
    seconds = time.perf_counter() - start
    failed = [c.name for c in checks if not c.passed]
    ok = seconds < MAX_SECONDS_FULL and not failed
    report(10, f"full verification, {len(checks)} checks, {len(failed)} failed (seconds)",
           seconds, MAX_SECONDS_FULL, ok)
    assert not failed
    assert seconds < MAX_SECONDS_FULL
