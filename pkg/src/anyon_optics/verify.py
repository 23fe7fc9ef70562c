"""End-to-end verification suite behind ``anyon-optics verify``.

Each check returns a :class:`Check` with the largest deviation observed and
the tolerance it is held to. ``quick`` runs the algebra and worked-example
checks; ``full`` runs everything.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field
from typing import Callable, List

import numpy as np
from scipy.stats import unitary_group

from .encoded import (
    ENTANGLING_SEQUENCE,
    LogicalLayout,
    c_phi_reference,
    cphi_encoded_form,
    compile_single_qubit,
    entangling_circuit,
    logical_unitary,
    physical_cphi_encoded_form,
    tabulated_bs_matrix,
    tabulated_cphi_matrix,
    zxz_angles,
    WINDOW_BASIS,
)
from .entangling import ep_formula, local_invariants
from .fock import AlgebraConfig, FockVector, basis_label, enumerate_basis, ladder_matrices, \
    verify_deformed_relations
from .optics import (
    Circuit,
    OpticalElement,
    apply_beam_splitter,
    build_element_matrix,
    element_unitary,
    evolve_exact,
    run_circuit,
)
from .oracles import chain_index, free_fermion_amplitude, hardcore_boson_evolve, single_particle_matrix

PHI_SET = (0.0, math.pi / 7, math.pi / 4, 1.0, math.pi / 2, 3 * math.pi / 4, math.pi)


@dataclass
class Check:
    name: str
    max_violation: float
    tolerance: float
    detail: str = ""
    notes: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.max_violation < self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.name}: max violation {self.max_violation:.3e} "
                f"(tol {self.tolerance:g}, {self.seconds:.2f}s){' - ' + self.detail if self.detail else ''}")


def random_circuit(rng: np.random.Generator, m: int, phi: float, length: int,
                   ps_fraction: float = 0.3) -> Circuit:
    elements = []
    for _ in range(length):
        if m == 1 or rng.random() < ps_fraction:
            elements.append(OpticalElement.ps(int(rng.integers(1, m + 1)), rng.uniform(-np.pi, np.pi)))
        else:
            i, j = sorted(rng.choice(np.arange(1, m + 1), size=2, replace=False))
            elements.append(OpticalElement.bs(int(i), int(j), rng.uniform(-np.pi, np.pi)))
    return Circuit(m, phi, elements)


# --- individual checks ------------------------------------------------------

def check_algebra(max_m: int = 5, phis=PHI_SET) -> Check:
    worst = 0.0
    for m in range(1, max_m + 1):
        for phi in phis:
            worst = max(worst, verify_deformed_relations(AlgebraConfig(m, phi)).max_violation)
    return Check("deformed algebra (both relation families)", worst, 1e-12,
                 f"m<={max_m}, {len(phis)} phi values")


def example_amplitudes(phi: float):
    """Expected images of |110> and |011> under BS13(pi/4)."""
    s = 1 / math.sqrt(2)
    first = {(1, 1, 0): s, (0, 1, 1): -1j * cmath.exp(-1j * phi) * s}
    second = {(1, 1, 0): -1j * cmath.exp(1j * phi) * s, (0, 1, 1): s}
    return first, second


def check_worked_example(n_phi: int = 10) -> Check:
    worst = 0.0
    for phi in np.linspace(0, math.pi, n_phi):
        for start, expected in zip([(1, 1, 0), (0, 1, 1)], example_amplitudes(phi)):
            for mode in ("analytic", "exact"):
                out = run_circuit(Circuit(3, float(phi), [OpticalElement.bs(1, 3, math.pi / 4)]), start, mode)
                worst = max(worst, out.distance(FockVector(3, expected)))
    return Check("worked example BS13(pi/4) on |110>, |011>", worst, 1e-12, f"{n_phi} phi values, both engines")


def check_dual_engine(max_m: int = 6, draws: int = 200, seed: int = 7) -> Check:
    rng = np.random.default_rng(seed)
    worst = 0.0
    count = 0
    for m in range(2, max_m + 1):
        for _ in range(draws):
            i, j = sorted(rng.choice(np.arange(1, m + 1), size=2, replace=False))
            theta = rng.uniform(-2 * np.pi, 2 * np.pi)
            cfg = AlgebraConfig(m, rng.uniform(0, np.pi))
            e = OpticalElement.bs(int(i), int(j), theta)
            for n in range(m + 1):
                basis = enumerate_basis(m, n)
                H = build_element_matrix(e, basis, cfg)
                for k, bits in enumerate(basis):
                    exact = evolve_exact(H, theta, np.eye(len(basis))[:, k])
                    analytic = apply_beam_splitter(FockVector.basis(bits), int(i), int(j), theta, cfg)
                    worst = max(worst, np.abs(analytic.to_dense(basis) - exact).max())
                    count += 1
    return Check("analytic beam-splitter rule vs Hermitian exponential", worst, 1e-10,
                 f"m=2..{max_m}, {draws} draws per m, {count} basis states")


def heisenberg_deviations(phi: float = 0.7, theta: float = 0.4) -> dict:
    """Compare the Heisenberg-picture beam-splitter solutions against exact conjugation.

    Uses m=3 with i=1, j=3 and the effective phase alpha = 2 phi. Keys name
    the candidate formula; values are max entrywise deviations.
    """
    from scipy.linalg import expm

    cfg = AlgebraConfig(3, phi)
    ad, a = ladder_matrices(cfg)
    eye = np.eye(8)
    w_i = eye - (1 - cmath.exp(1j * phi)) * ad[0] @ a[0]
    w_j_dag = (eye - (1 - cmath.exp(1j * phi)) * ad[2] @ a[2]).conj().T
    c, s = math.cos(theta), math.sin(theta)
    out = {}

    def heis(alpha):
        H = cmath.exp(1j * alpha) * ad[0] @ a[2] + cmath.exp(-1j * alpha) * ad[2] @ a[0]
        U = expm(1j * theta * H)
        return U @ ad[0] @ U.conj().T, U @ ad[2] @ U.conj().T

    hi, hj = heis(0.0)
    out["mode i, alpha=0: cos a_i + i sin a_j W_i"] = np.abs(hi - (c * ad[0] + 1j * s * ad[2] @ w_i)).max()
    out["mode j, alpha=0: cos a_j + i sin a_i W_j^dag"] = np.abs(hj - (c * ad[2] + 1j * s * ad[0] @ w_j_dag)).max()
    alpha = 2 * phi
    hi, hj = heis(alpha)
    e = cmath.exp(1j * alpha)
    out["mode i, printed: +i e^{+i alpha}"] = np.abs(hi - (c * ad[0] + 1j * e * s * ad[2] @ w_i)).max()
    out["mode i, exact:   +i e^{-i alpha}"] = np.abs(hi - (c * ad[0] + 1j / e * s * ad[2] @ w_i)).max()
    out["mode j, printed: -i e^{-i alpha}"] = np.abs(hj - (c * ad[2] - 1j / e * s * ad[0] @ w_j_dag)).max()
    out["mode j, exact:   +i e^{+i alpha}"] = np.abs(hj - (c * ad[2] + 1j * e * s * ad[0] @ w_j_dag)).max()
    H0 = ad[0] @ a[2] + ad[2] @ a[0]
    H2 = e * ad[0] @ a[2] + ad[2] @ a[0] / e
    out["BS13 a_2^dag = a_2^dag BS13^(2phi)"] = np.abs(
        expm(1j * theta * H0) @ ad[1] - ad[1] @ expm(1j * theta * H2)).max()
    return out


def check_heisenberg() -> Check:
    devs = heisenberg_deviations()
    exact_keys = [k for k in devs if "printed" not in k]
    notes = [f"{k}: {v:.3e}" for k, v in devs.items()]
    printed_fail = [k for k in devs if "printed" in k and devs[k] > 1e-6]
    if printed_fail:
        notes.append("the published phase-corrected solutions do not hold as printed; "
                     "the exact forms (and the worked example) carry +i e^{-i alpha} for mode i "
                     "and +i e^{+i alpha} for mode j")
    return Check("Heisenberg-picture solutions and intermediate-mode identity",
                 max(devs[k] for k in exact_keys), 1e-12, "exact forms", notes)


def appendix_comparison(theta: float, phi: float) -> dict:
    """Entrywise differences between published 6x6 beam-splitters and the oracle."""
    out = {}
    for i, j in ((1, 2), (2, 3), (1, 3)):
        e = OpticalElement.bs(i, j, theta)
        oracle = element_unitary(e, 4, 2, phi, "exact")
        diff = tabulated_bs_matrix(i, j, theta, phi) - oracle
        items = [(WINDOW_BASIS[r], WINDOW_BASIS[c], tabulated_bs_matrix(i, j, theta, phi)[r, c], oracle[r, c])
                 for r, c in zip(*np.nonzero(np.abs(diff) > 1e-12))]
        out[(i, j)] = (np.abs(diff).max(), items)
    return out


def check_appendix(n_samples: int = 12, seed: int = 3) -> Check:
    rng = np.random.default_rng(seed)
    worst = 0.0
    bs13_items = set()
    for _ in range(n_samples):
        theta, phi = rng.uniform(-np.pi, np.pi), rng.uniform(0.05, np.pi - 0.05)
        comp = appendix_comparison(theta, phi)
        worst = max(worst, comp[(1, 2)][0], comp[(2, 3)][0])
        for out_state, in_state, _, _ in comp[(1, 3)][1]:
            bs13_items.add((basis_label(out_state), basis_label(in_state)))
    notes = []
    if bs13_items:
        notes.append("published BS13 differs from the oracle at <out|BS13|in> = "
                     + ", ".join(f"<{o}|{i}>" for o, i in sorted(bs13_items)))
        notes.append("published: i sin(theta) on 1100 <-> 0110 and -i e^{-+i phi} sin(theta) "
                     "on 1001 <-> 0011")
        notes.append("oracle: -i e^{-+i phi} sin(theta) on 1100 <-> 0110 (mode 2 occupied, as in "
                     "the worked example) and i sin(theta) on 1001 <-> 0011")
    return Check("published BS12 / BS23 reproduced; BS13 itemized", worst, 1e-12,
                 f"{len(bs13_items)} BS13 entries differ", notes)


def check_encoded_form(n_phi: int = 25) -> Check:
    worst = 0.0
    for phi in np.linspace(0, math.pi, n_phi):
        gate = c_phi_reference(float(phi))
        worst = max(worst, np.abs(gate.encoded_matrix - cphi_encoded_form(float(phi))).max())
        M = gate.two_particle_matrix
        for k in (0, 5):  # 1100 and 0011
            col = M[:, k]
            lam = col[k]
            worst = max(worst, np.abs(col - lam * np.eye(6)[:, k]).max())
    return Check("encoded C(phi) = Rz(pi/2)x|0><0| + Rn(pi/2)x|1><1|; 1100, 0011 eigenstates",
                 worst, 1e-10, f"{n_phi} phi values")


def check_central_formula(n_phi: int = 50) -> Check:
    worst = 0.0
    for phi in np.linspace(0, math.pi, n_phi):
        ep = local_invariants(c_phi_reference(float(phi)).encoded_matrix).ep
        worst = max(worst, abs(ep - ep_formula(float(phi))))
    ep0 = local_invariants(c_phi_reference(0.0).encoded_matrix).ep
    ep_pi = local_invariants(c_phi_reference(math.pi).encoded_matrix).ep
    worst = max(worst, abs(ep0), abs(ep_pi - 1))
    return Check("entangling power 1-|G1| = 1 - cos^4(phi/2)", worst, 1e-9,
                 f"{n_phi}-point grid; ep(0)={ep0:.2e}, ep(pi)={ep_pi:.12f}")


def check_endpoints(n_circuits: int = 30, seed: int = 11) -> Check:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_circuits):
        m = int(rng.integers(2, 7))
        c = random_circuit(rng, m, 0.0, int(rng.integers(1, 11)))
        U = single_particle_matrix(c)
        for n in range(0, min(3, m) + 1):
            basis = enumerate_basis(m, n)
            for x in basis:
                out = run_circuit(c, x)
                for y in basis:
                    worst = max(worst, abs(out[y] - free_fermion_amplitude(U, x, y)))
    for _ in range(n_circuits):
        m = int(rng.integers(2, 7))
        c = random_circuit(rng, m, math.pi, int(rng.integers(1, 11)))
        for n in range(m + 1):
            for x in enumerate_basis(m, n):
                v = np.zeros(2 ** m, dtype=complex)
                v[chain_index(x)] = 1
                chain = hardcore_boson_evolve(c, v)
                out = run_circuit(c, x)
                dense = np.zeros(2 ** m, dtype=complex)
                for bits, amp in out.items():
                    dense[chain_index(bits)] = amp
                worst = max(worst, np.abs(dense - chain).max())
    return Check("endpoint oracles (phi=0 determinants, phi=pi qubit chain)", worst, 1e-9,
                 f"{n_circuits} circuits per endpoint")


def check_single_qubit(n_targets: int = 100, seed: int = 5) -> Check:
    rng = np.random.default_rng(seed)
    layout = LogicalLayout(1)
    worst = 0.0
    for _ in range(n_targets):
        target = unitary_group.rvs(2, random_state=rng)
        U, leak = logical_unitary(compile_single_qubit(zxz_angles(target), 1, layout), layout)
        ov = np.vdot(target, U)
        worst = max(worst, np.abs(U - ov / abs(ov) * target).max(), leak.max())
    # generator actions on the pair, exact
    for theta in np.linspace(-np.pi, np.pi, 9):
        ps, _ = logical_unitary(Circuit(2, 0.0, [OpticalElement.ps(2, theta)]), layout)
        bs, _ = logical_unitary(Circuit(2, 0.0, [OpticalElement.bs(1, 2, theta)]), layout)
        c, s = math.cos(theta), math.sin(theta)
        worst = max(worst, np.abs(ps - np.diag([1, cmath.exp(1j * theta)])).max(),
                    np.abs(bs - np.array([[c, 1j * s], [1j * s, c]])).max())
    return Check("single-qubit compilation (random targets) and PS/BS generator actions", worst, 1e-9,
                 f"{n_targets} Haar-random targets")


def check_conservation(n_circuits: int = 100, seed: int = 13) -> Check:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_circuits):
        m = int(rng.integers(2, 7))
        c = random_circuit(rng, m, rng.uniform(0, np.pi), int(rng.integers(1, 21)))
        x = tuple(int(b) for b in rng.integers(0, 2, size=m))
        out = run_circuit(c, x)
        worst = max(worst, abs(out.norm() - 1.0))
        if out.particle_numbers() - {sum(x)}:
            worst = max(worst, 1.0)
    return Check("norm and particle-number conservation", worst, 1e-12, f"{n_circuits} random circuits")


def check_reconstructed_gate(n_phi: int = 9) -> Check:
    """The recovered beam-splitter sequence versus the published C(phi).

    Pass criterion: the sequence built from the published matrices reproduces
    the published C(phi); with exact dynamics the encoded gate has no leakage,
    matches its closed form and shares (G1, G2) with C(phi).
    """
    layout = LogicalLayout(2)
    worst = 0.0
    max_tab_gap = 0.0
    for phi in np.linspace(0, math.pi, n_phi):
        phi = float(phi)
        U = np.eye(6, dtype=complex)
        for i, j, t in ENTANGLING_SEQUENCE:
            U = tabulated_bs_matrix(i, j, t, phi) @ U
        worst = max(worst, np.abs(U - tabulated_cphi_matrix(phi)).max())
        enc, leak = logical_unitary(entangling_circuit(phi), layout, "exact")
        worst = max(worst, leak.max(), np.abs(enc - physical_cphi_encoded_form(phi)).max())
        a, b = local_invariants(enc), local_invariants(cphi_encoded_form(phi))
        worst = max(worst, abs(a.g1 - b.g1), abs(a.g2 - b.g2))
        max_tab_gap = max(max_tab_gap, np.abs(enc - cphi_encoded_form(phi)).max())
    notes = [
        "sequence (application order): " + ", ".join(
            f"BS{i}{j}({t / math.pi:g}pi)" for i, j, t in ENTANGLING_SEQUENCE),
        "with the published BS13 it reproduces the published C(phi) exactly",
        f"with exact dynamics it gives Rn'(pi/2)x|0><0| + Rz(-pi/2)x|1><1|, n'=(-sin phi,0,-cos phi); "
        f"max entry gap to published C(phi) {max_tab_gap:.3f}; locally equivalent, same entangling power",
    ]
    return Check("reconstructed entangling circuit", worst, 1e-10, f"{n_phi} phi values", notes)


QUICK_CHECKS: List[Callable[[], Check]] = [check_algebra, check_worked_example]
FULL_CHECKS: List[Callable[[], Check]] = [
    check_algebra,
    check_worked_example,
    check_heisenberg,
    check_dual_engine,
    check_appendix,
    check_encoded_form,
    check_central_formula,
    check_endpoints,
    check_single_qubit,
    check_conservation,
    check_reconstructed_gate,
]


def run_verification(level: str = "full") -> List[Check]:
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    results = []
    for fn in QUICK_CHECKS if level == "quick" else FULL_CHECKS:
        start = time.perf_counter()
        check = fn()
        check.seconds = time.perf_counter() - start
        results.append(check)
    return results
