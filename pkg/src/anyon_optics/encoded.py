"""Dual-rail encoded qubits on anyonic modes.

Qubit q (1-based) lives on modes (2q-1, 2q): |0_L> = |1,0>, |1_L> = |0,1>.
Logical bitstrings put qubit 1 leftmost, so in a logical statevector qubit 1
is the most significant bit.

Single-qubit gates compile to phase-shifters and a beam-splitter on the pair.
The two-qubit gate C(phi) acts on the 4-mode window of two neighbouring
qubits, i.e. on the 6-dimensional two-particle sector ordered
1100, 1010, 1001, 0110, 0101, 0011. Rows/columns 1..4 of that matrix are the
encoded states 00, 01, 10, 11.
"""

from __future__ import annotations

import cmath
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize

from .exceptions import CodeSpaceError, InvalidArgumentError
from .fock import AlgebraConfig, BasisState, FockVector, enumerate_basis
from .optics import (
    Circuit,
    OpticalElement,
    build_element_matrix,
    run_circuit,
)

log = logging.getLogger(__name__)

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PROJ_0 = np.diag([1.0, 0.0]).astype(complex)
PROJ_1 = np.diag([0.0, 1.0]).astype(complex)

WINDOW_BASIS: Tuple[BasisState, ...] = tuple(enumerate_basis(4, 2))
_WINDOW_INDEX = {b: k for k, b in enumerate(WINDOW_BASIS)}
ENCODED_ROWS = [1, 2, 3, 4]


def rotation(axis: Sequence[float], angle: float) -> np.ndarray:
    """Bloch-sphere rotation exp(-i angle/2 n.sigma)."""
    nx, ny, nz = axis
    gen = nx * PAULI_X + ny * PAULI_Y + nz * PAULI_Z
    return math.cos(angle / 2) * PAULI_I - 1j * math.sin(angle / 2) * gen


def rz(angle: float) -> np.ndarray:
    return rotation((0, 0, 1), angle)


def rx(angle: float) -> np.ndarray:
    return rotation((1, 0, 0), angle)


@dataclass(frozen=True)
class LogicalLayout:
    n_qubits: int

    def __post_init__(self):
        if self.n_qubits < 0:
            raise InvalidArgumentError("qubit count must be non-negative")

    @property
    def m(self) -> int:
        return 2 * self.n_qubits

    def modes(self, q: int) -> Tuple[int, int]:
        if not (1 <= q <= self.n_qubits):
            raise InvalidArgumentError(f"qubit {q} outside 1..{self.n_qubits}")
        return 2 * q - 1, 2 * q

    def logical_strings(self) -> List[str]:
        return ["".join(p) for p in itertools.product("01", repeat=self.n_qubits)]


def encode_logical(bits: Union[str, Sequence[int]]) -> BasisState:
    """Dual-rail expansion, e.g. '01' -> (1, 0, 0, 1)."""
    out: List[int] = []
    for b in bits:
        b = int(b)
        if b not in (0, 1):
            raise InvalidArgumentError(f"logical bits must be 0/1, got {bits!r}")
        out.extend((0, 1) if b else (1, 0))
    return tuple(out)


def decode_logical(v: FockVector, layout: LogicalLayout) -> Tuple[np.ndarray, float]:
    """Project onto the code space.

    Returns the 2^n logical amplitudes and the squared norm that lies outside
    the code space (leakage).
    """
    if v.m != layout.m:
        raise InvalidArgumentError(f"vector has {v.m} modes, layout needs {layout.m}")
    logical = np.zeros(2 ** layout.n_qubits, dtype=complex)
    leakage = 0.0
    for bits, amp in v.items():
        pairs = [bits[2 * k: 2 * k + 2] for k in range(layout.n_qubits)]
        if all(sum(p) == 1 for p in pairs):
            index = 0
            for p in pairs:
                index = 2 * index + p[1]
            logical[index] += amp
        else:
            leakage += abs(amp) ** 2
    return logical, leakage


def logical_unitary(c: Circuit, layout: LogicalLayout, mode: str = "analytic") -> Tuple[np.ndarray, np.ndarray]:
    """Logical matrix of a circuit and per-input leakage (column order as logical_strings)."""
    if c.m != layout.m:
        raise InvalidArgumentError(f"circuit has {c.m} modes, layout needs {layout.m}")
    strings = layout.logical_strings()
    U = np.zeros((len(strings), len(strings)), dtype=complex)
    leak = np.zeros(len(strings))
    for k, s in enumerate(strings):
        U[:, k], leak[k] = decode_logical(run_circuit(c, encode_logical(s), mode), layout)
    return U, leak


# --- single-qubit gates -----------------------------------------------------

@dataclass(frozen=True)
class SingleQubitSpec:
    """Target e^{i alpha} Rz(beta) Rx(gamma) Rz(delta)."""

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    delta: float = 0.0

    def matrix(self) -> np.ndarray:
        return cmath.exp(1j * self.alpha) * rz(self.beta) @ rx(self.gamma) @ rz(self.delta)


def zxz_angles(u: np.ndarray) -> SingleQubitSpec:
    """Euler angles with u = e^{i alpha} Rz(beta) Rx(gamma) Rz(delta)."""
    u = np.asarray(u, dtype=complex)
    alpha = cmath.phase(np.linalg.det(u)) / 2
    v = u * cmath.exp(-1j * alpha)
    gamma = 2 * math.atan2(abs(v[1, 0]), abs(v[0, 0]))
    # v00 = e^{-i(b+d)/2} cos(g/2), v10 = -i e^{i(b-d)/2} sin(g/2)
    plus = -2 * cmath.phase(v[0, 0]) if abs(v[0, 0]) > 1e-12 else 0.0
    minus = 2 * cmath.phase(1j * v[1, 0]) if abs(v[1, 0]) > 1e-12 else 0.0
    return SingleQubitSpec(alpha, (plus + minus) / 2, gamma, (plus - minus) / 2)


def compile_single_qubit(spec: SingleQubitSpec, qubit: int, layout: LogicalLayout,
                         phi: float = 0.0) -> Circuit:
    """Optical circuit realizing ``spec`` exactly (global phase included) on one pair.

    On the pair, PS on the second mode by t acts as e^{it/2} Rz(t) and
    BS(t) as exp(i t X) = Rx(-2t). The leftover phase is cancelled by an
    equal phase-shift on both modes, which is a pure phase on the code space.
    Zero-angle elements are omitted.
    """
    a, b = layout.modes(qubit)
    uniform = spec.alpha - (spec.beta + spec.delta) / 2
    steps = [
        OpticalElement.ps(b, spec.delta),
        OpticalElement.bs(a, b, -spec.gamma / 2),
        OpticalElement.ps(b, spec.beta),
        OpticalElement.ps(a, uniform),
        OpticalElement.ps(b, uniform),
    ]
    return Circuit(layout.m, phi, [e for e in steps if e.theta != 0.0])


# --- the entangling gate C(phi) ---------------------------------------------

def cphi_axis(phi: float) -> np.ndarray:
    return np.array([-math.sin(phi), 0.0, math.cos(phi)])


def cphi_encoded_form(phi: float) -> np.ndarray:
    """Rz(pi/2) (x) |0><0| + Rn(pi/2) (x) |1><1| built from Pauli algebra.

    The rotation acts on qubit 1 and the projector on qubit 2, matching the
    layout of the tabulated 4x4 matrix.
    """
    return (np.kron(rz(math.pi / 2), PROJ_0)
            + np.kron(rotation(cphi_axis(phi), math.pi / 2), PROJ_1))


def tabulated_cphi_matrix(phi: float) -> np.ndarray:
    """Published 6x6 matrix of C(phi) in the window basis."""
    s2 = math.sqrt(2)
    c, s = math.cos(phi), math.sin(phi)
    M = np.eye(6, dtype=complex)
    M[1, 1] = cmath.exp(-1j * math.pi / 4)
    M[2, 2] = (1 - 1j * c) / s2
    M[3, 3] = cmath.exp(1j * math.pi / 4)
    M[4, 4] = (1 + 1j * c) / s2
    M[2, 4] = M[4, 2] = 1j * s / s2
    return M


def tabulated_bs_matrix(i: int, j: int, theta: float, phi: float) -> np.ndarray:
    """Published 6x6 beam-splitter matrices for (1,2), (2,3) and (1,3).

    The (1,3) entry places the e^{-+i phi} phases on the 1001 <-> 0011 block.
    The exact evolution puts them on 1100 <-> 0110 instead, where mode 2 is
    occupied; see ``bs13_discrepancy``.
    """
    c, s = math.cos(theta), math.sin(theta)
    M = np.eye(6, dtype=complex)
    if (i, j) == (1, 2):
        blocks = [(1, 3, 1j * s, 1j * s), (2, 4, 1j * s, 1j * s)]
    elif (i, j) == (2, 3):
        blocks = [(0, 1, 1j * s, 1j * s), (4, 5, 1j * s, 1j * s)]
    elif (i, j) == (1, 3):
        blocks = [(0, 3, 1j * s, 1j * s),
                  (2, 5, -1j * cmath.exp(-1j * phi) * s, -1j * cmath.exp(1j * phi) * s)]
    else:
        raise InvalidArgumentError(f"no tabulated matrix for BS{i}{j}")
    for r, q, upper, lower in blocks:
        M[r, r] = M[q, q] = c
        M[r, q] = upper
        M[q, r] = lower
    return M


# Beam-splitter sequence (application order) recovered by search_decomposition:
# with the tabulated BS13 it reproduces the tabulated C(phi) for every phi.
ENTANGLING_SEQUENCE: Tuple[Tuple[int, int, float], ...] = (
    (1, 2, math.pi / 4),
    (2, 3, math.pi / 2),
    (1, 3, 3 * math.pi / 4),
    (2, 3, 3 * math.pi / 2),
    (1, 2, 3 * math.pi / 4),
)


def entangling_circuit(phi: float) -> Circuit:
    return Circuit(4, phi, [OpticalElement.bs(i, j, t) for i, j, t in ENTANGLING_SEQUENCE])


def physical_cphi_encoded_form(phi: float) -> np.ndarray:
    """Encoded action of ``entangling_circuit`` under the exact dynamics.

    Rn'(pi/2) (x) |0><0| + Rz(-pi/2) (x) |1><1| with n' = (-sin phi, 0, -cos phi).
    Locally equivalent to C(phi).
    """
    axis = (-math.sin(phi), 0.0, -math.cos(phi))
    return np.kron(rotation(axis, math.pi / 2), PROJ_0) + np.kron(rz(-math.pi / 2), PROJ_1)


@dataclass
class CPhiGate:
    phi: float
    two_particle_matrix: np.ndarray
    encoded_matrix: np.ndarray
    axis: np.ndarray


def c_phi_reference(phi: float) -> CPhiGate:
    """The tabulated C(phi) with its encoded 4x4 restriction and rotation axis."""
    full = tabulated_cphi_matrix(phi)
    return CPhiGate(phi, full, full[np.ix_(ENCODED_ROWS, ENCODED_ROWS)], cphi_axis(phi))


def apply_encoded_two_qubit(v: FockVector, pair: Union[int, Tuple[int, int]],
                            gate: Union[CPhiGate, np.ndarray]) -> FockVector:
    """Apply a 6x6 window gate to qubits (q, q+1), i.e. modes 2q-1 .. 2q+2.

    Modes outside the window are untouched: the gate's generators commute
    with creation operators outside [2q-1, 2q+2].
    """
    if isinstance(pair, tuple):
        q, q2 = pair
        if q2 != q + 1:
            raise InvalidArgumentError(f"two-qubit gates need adjacent qubits, got {pair}")
    else:
        q = int(pair)
    lo = 2 * q - 2
    if q < 1 or lo + 4 > v.m:
        raise InvalidArgumentError(f"qubit pair starting at {q} does not fit in {v.m} modes")
    matrix = gate.two_particle_matrix if isinstance(gate, CPhiGate) else np.asarray(gate)
    terms = []
    for bits, amp in v.items():
        window = bits[lo: lo + 4]
        if sum(window) != 2:
            raise CodeSpaceError(
                f"window modes {lo + 1}..{lo + 4} of {''.join(map(str, bits))} "
                f"hold {sum(window)} particles, expected 2")
        column = matrix[:, _WINDOW_INDEX[window]]
        for r, coeff in enumerate(column):
            if coeff != 0:
                terms.append((bits[:lo] + WINDOW_BASIS[r] + bits[lo + 4:], coeff * amp))
    return FockVector.from_terms(v.m, terms)


# --- decomposition search ---------------------------------------------------

GRID = tuple(k * math.pi / 4 for k in range(1, 8))
DEFAULT_PAIRS = ((1, 2), (2, 3), (1, 3))


@dataclass
class DecompositionResult:
    circuit: Circuit
    residual: float
    found: bool
    candidates_checked: int = 0
    notes: List[str] = field(default_factory=list)


def phase_aligned_residual(u: np.ndarray, target: np.ndarray) -> float:
    """min over psi of ||u - e^{i psi} target||_F."""
    overlap = np.vdot(target, u)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(u - phase * target))


def _batched_residuals(us: np.ndarray, target: np.ndarray) -> np.ndarray:
    overlap = np.einsum("ij,kij->k", target.conj(), us)
    mag = np.abs(overlap)
    phase = np.where(mag > 0, overlap / np.where(mag > 0, mag, 1), 1.0)
    return np.linalg.norm(us - phase[:, None, None] * target[None], axis=(1, 2))


class _ElementFamily:
    """theta -> 6x6 sector unitary of one beam-splitter, exact or tabulated."""

    def __init__(self, i: int, j: int, cfg: AlgebraConfig, tabulated: bool):
        self.i, self.j, self.phi, self.tabulated = i, j, cfg.phi, tabulated
        if not tabulated:
            H = build_element_matrix(OpticalElement.bs(i, j, 0.0), WINDOW_BASIS, cfg)
            self.evals, self.evecs = np.linalg.eigh(H)

    def __call__(self, theta: float) -> np.ndarray:
        if self.tabulated:
            return tabulated_bs_matrix(self.i, self.j, theta, self.phi)
        return (self.evecs * np.exp(1j * theta * self.evals)) @ self.evecs.conj().T


def search_decomposition(target: np.ndarray, pairs: Sequence[Tuple[int, int]] = DEFAULT_PAIRS,
                         max_len: int = 5, cfg: Optional[AlgebraConfig] = None,
                         threshold: float = 1e-8, tabulated_bs13: bool = False,
                         refine_top: int = 8) -> DecompositionResult:
    """Find a beam-splitter sequence on the 4-mode, 2-particle sector matching ``target``.

    Every sequence of up to ``max_len`` elements (no element repeated back to
    back, since BS(a) BS(b) = BS(a+b)) is scanned with angles on the grid
    k pi/4; the best grid points are then refined with Nelder-Mead. Ties are
    broken by residual, then length, then element order.

    With ``tabulated_bs13`` the published BS13 matrix replaces the exact one.
    """
    cfg = cfg or AlgebraConfig(4, 0.0)
    target = np.asarray(target, dtype=complex)
    if target.shape != (6, 6):
        raise InvalidArgumentError(f"target must be a 6x6 sector unitary, got {target.shape}")
    if cfg.m != 4:
        raise InvalidArgumentError("decomposition search works on the 4-mode window")
    if max_len < 1:
        raise InvalidArgumentError("max_len must be at least 1")
    pairs = [tuple(p) for p in pairs]
    families = [_ElementFamily(i, j, cfg, tabulated_bs13 and (i, j) == (1, 3)) for i, j in pairs]
    grid_mats = [np.stack([f(t) for t in GRID]) for f in families]

    # (rounded residual, length, pair indices, grid indices)
    pool: List[Tuple[float, int, Tuple[int, ...], Tuple[int, ...]]] = []
    checked = 0

    def scan(types: Tuple[int, ...], prods: np.ndarray, idx: np.ndarray):
        nonlocal checked
        res = _batched_residuals(prods, target)
        checked += len(res)
        keep = np.argsort(res, kind="stable")[:refine_top]
        for k in keep:
            pool.append((round(float(res[k]), 10), len(types), types, tuple(int(x) for x in idx[k])))
        if len(types) == max_len:
            return
        for p in range(len(pairs)):
            if p == types[-1]:
                continue
            # row b * len(GRID) + a holds grid_mats[p][a] @ prods[b]
            nxt = np.einsum("aij,bjk->baik", grid_mats[p], prods).reshape(-1, 6, 6)
            nidx = np.concatenate([np.repeat(idx, len(GRID), axis=0),
                                   np.tile(np.arange(len(GRID)), len(idx))[:, None]], axis=1)
            scan(types + (p,), nxt, nidx)

    for p in range(len(pairs)):
        scan((p,), grid_mats[p], np.arange(len(GRID))[:, None])

    pool.sort()
    best = None
    notes = []
    seen = set()
    for res, length, types, gidx in pool:
        if len(seen) >= refine_top:
            break
        if (types, gidx) in seen:
            continue
        seen.add((types, gidx))
        angles = np.array([GRID[g] for g in gidx])

        def product(x, types=types):
            u = np.eye(6, dtype=complex)
            for p, t in zip(types, x):
                u = families[p](t) @ u
            return u

        exact = phase_aligned_residual(product(angles), target)
        if exact > threshold:
            opt = minimize(lambda x: phase_aligned_residual(product(x), target), angles,
                           method="Nelder-Mead",
                           options={"xatol": 1e-13, "fatol": 1e-15, "maxiter": 4000 * length})
            if opt.fun < exact:
                angles, exact = opt.x, float(opt.fun)
        key = (round(exact, 10), length, types, gidx)
        if best is None or key < best[0]:
            best = (key, angles, exact, types)

    _, angles, residual, types = best
    angles = np.mod(angles, 2 * math.pi)
    circuit = Circuit(4, cfg.phi, [OpticalElement.bs(*pairs[p], float(t)) for p, t in zip(types, angles)])
    found = residual < threshold
    if not found:
        notes.append(f"no sequence up to length {max_len} below residual {threshold:g}")
    log.info("decomposition search: residual %.3g after %d grid candidates", residual, checked)
    return DecompositionResult(circuit, residual, found, checked, notes)
