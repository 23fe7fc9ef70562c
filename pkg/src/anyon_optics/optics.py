"""Phase-shifters and beam-splitters acting on anyonic Fock states.

Two engines are provided. The analytic engine applies each element through
its closed-form 2x2 block on the pair of basis states it couples; the exact
engine assembles the element Hamiltonian from the ladder operators of
``fock`` and exponentiates it by eigendecomposition. They are independent
routes to the same unitary and are cross-checked in the test suite.

Beam-splitter block. For BS_ij(theta), i < j, and a basis state with
occupations (n_i, n_j) = (1, 0) or (0, 1), let L be the number of occupied
modes strictly between i and j. Then

    |..1_i..0_j..>  ->  cos(theta) |same> + i sin(theta) (-1)^L e^{-i phi L} |..0_i..1_j..>
    |..0_i..1_j..>  ->  cos(theta) |same> + i sin(theta) (-1)^L e^{+i phi L} |..1_i..0_j..>

while (0, 0) and (1, 1) are left unchanged. The factor e^{-i phi L} is the
1D Aharonov-Bohm phase picked up by hopping across L occupied modes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from .exceptions import InvalidArgumentError, PreconditionError
from .fock import (
    AlgebraConfig,
    BasisState,
    FockVector,
    apply_annihilation,
    apply_creation,
    enumerate_basis,
    operator_matrix,
)

PHASE_SHIFTER = "ps"
BEAM_SPLITTER = "bs"
ENGINES = ("analytic", "exact")


@dataclass(frozen=True)
class OpticalElement:
    """A phase-shifter on one mode or a beam-splitter on modes i < j."""

    kind: str
    modes: Tuple[int, ...]
    theta: float

    def __post_init__(self):
        if self.kind == PHASE_SHIFTER:
            if len(self.modes) != 1 or self.modes[0] < 1:
                raise InvalidArgumentError(f"phase-shifter needs one mode >= 1, got {self.modes}")
        elif self.kind == BEAM_SPLITTER:
            if len(self.modes) != 2 or not (1 <= self.modes[0] < self.modes[1]):
                raise InvalidArgumentError(f"beam-splitter needs modes 1 <= i < j, got {self.modes}")
        else:
            raise InvalidArgumentError(f"unknown element kind {self.kind!r}")

    @classmethod
    def ps(cls, i: int, theta: float) -> "OpticalElement":
        return cls(PHASE_SHIFTER, (int(i),), float(theta))

    @classmethod
    def bs(cls, i: int, j: int, theta: float) -> "OpticalElement":
        return cls(BEAM_SPLITTER, (int(i), int(j)), float(theta))

    def __str__(self):
        name = "PS" if self.kind == PHASE_SHIFTER else "BS"
        return f"{name}{''.join(map(str, self.modes))}({self.theta:.6g})"


@dataclass
class Circuit:
    """Ordered list of optical elements; the first element is applied first."""

    m: int
    phi: float = 0.0
    elements: List[OpticalElement] = field(default_factory=list)

    def __post_init__(self):
        self.config  # validates m and phi
        for e in self.elements:
            self._check_element(e)

    def _check_element(self, e: OpticalElement) -> None:
        if max(e.modes) > self.m:
            raise InvalidArgumentError(f"{e} references a mode beyond m={self.m}")

    @property
    def config(self) -> AlgebraConfig:
        return AlgebraConfig(self.m, self.phi)

    def append(self, e: OpticalElement) -> "Circuit":
        self._check_element(e)
        self.elements.append(e)
        return self

    def __len__(self):
        return len(self.elements)


def apply_phase_shifter(v: FockVector, i: int, theta: float) -> FockVector:
    """Multiply every amplitude by e^{i theta n_i}."""
    if not (1 <= i <= v.m):
        raise InvalidArgumentError(f"mode index {i} outside 1..{v.m}")
    phase = cmath.exp(1j * theta)
    return FockVector.from_terms(
        v.m, ((bits, amp * phase if bits[i - 1] else amp) for bits, amp in v.items()))


def hop_phase(bits: BasisState, i: int, j: int, phi: float) -> complex:
    """Coefficient of the i -> j hop in H^BS_ij acting on ``bits`` (n_i=1, n_j=0)."""
    between = sum(bits[i:j - 1])
    return (-1) ** between * cmath.exp(-1j * phi * between)


def beam_splitter_block(between: int, theta: float, phi: float) -> np.ndarray:
    """2x2 unitary on (|..1_i..0_j..>, |..0_i..1_j..>) with ``between`` occupied modes in the gap."""
    w = (-1) ** between * cmath.exp(-1j * phi * between)
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, 1j * s * w.conjugate()],
                     [1j * s * w, c]])


def apply_beam_splitter(v: FockVector, i: int, j: int, theta: float, cfg: AlgebraConfig) -> FockVector:
    """Apply BS_ij(theta) = exp(i theta (a_i^dag a_j + a_j^dag a_i)) with the analytic block rule."""
    if v.m != cfg.m:
        raise InvalidArgumentError(f"vector has {v.m} modes, algebra has {cfg.m}")
    if not (1 <= i < j <= cfg.m):
        raise InvalidArgumentError(f"beam-splitter needs 1 <= i < j <= {cfg.m}, got ({i}, {j})")
    c, s = math.cos(theta), math.sin(theta)
    terms = []
    for bits, amp in v.items():
        ni, nj = bits[i - 1], bits[j - 1]
        if ni == nj:
            terms.append((bits, amp))
            continue
        swapped = list(bits)
        swapped[i - 1], swapped[j - 1] = nj, ni
        w = hop_phase(bits, i, j, cfg.phi)
        if ni == 0:
            w = w.conjugate()
        terms.append((bits, c * amp))
        terms.append((tuple(swapped), 1j * s * w * amp))
    return FockVector.from_terms(v.m, terms)


def apply_element(v: FockVector, e: OpticalElement, cfg: AlgebraConfig) -> FockVector:
    if e.kind == PHASE_SHIFTER:
        return apply_phase_shifter(v, e.modes[0], e.theta)
    return apply_beam_splitter(v, e.modes[0], e.modes[1], e.theta, cfg)


def build_element_matrix(e: OpticalElement, basis: Sequence[BasisState], cfg: AlgebraConfig) -> np.ndarray:
    """Hamiltonian of ``e`` restricted to ``basis``, assembled from ladder operators.

    H^PS_i = a_i^dag a_i and H^BS_ij = a_i^dag a_j + a_j^dag a_i.
    """
    for m_ in e.modes:
        cfg.check_mode(m_)
    if e.kind == PHASE_SHIFTER:
        (i,) = e.modes

        def ham(v):
            return apply_creation(apply_annihilation(v, i, cfg), i, cfg)
    else:
        i, j = e.modes

        def ham(v):
            forward = apply_creation(apply_annihilation(v, j, cfg), i, cfg)
            backward = apply_creation(apply_annihilation(v, i, cfg), j, cfg)
            return forward + backward
    return operator_matrix(ham, basis)


def evolve_exact(H: np.ndarray, theta: float, v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Return exp(i theta H) v via the eigendecomposition of Hermitian ``H``."""
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {H.shape}")
    if H.size and np.abs(H - H.conj().T).max() > tol:
        raise PreconditionError("matrix is not Hermitian within tolerance")
    evals, evecs = np.linalg.eigh(H)
    return evecs @ (np.exp(1j * theta * evals) * (evecs.conj().T @ np.asarray(v, dtype=complex)))


@lru_cache(maxsize=64)
def _sector_basis(m: int, n: int) -> Tuple[BasisState, ...]:
    return tuple(enumerate_basis(m, n))


def run_circuit(c: Circuit, input_state, mode: str = "analytic") -> FockVector:
    """Apply every element of ``c`` in order to an occupation basis state (or FockVector)."""
    if mode not in ENGINES:
        raise InvalidArgumentError(f"engine must be one of {ENGINES}, got {mode!r}")
    v = input_state if isinstance(input_state, FockVector) else FockVector.basis(input_state)
    if v.m != c.m:
        raise InvalidArgumentError(f"input has {v.m} modes, circuit has {c.m}")
    cfg = c.config
    if mode == "analytic":
        for e in c.elements:
            v = apply_element(v, e, cfg)
        return v

    sectors = v.particle_numbers()
    pieces = []
    for n in sorted(sectors):
        basis = _sector_basis(c.m, n)
        part = FockVector(c.m, {b: a for b, a in v.items() if sum(b) == n})
        vec = part.to_dense(basis)
        for e in c.elements:
            vec = evolve_exact(build_element_matrix(e, basis, cfg), e.theta, vec)
        pieces.append(FockVector.from_dense(vec, basis))
    out = FockVector(c.m, {})
    for p in pieces:
        out = out + p
    return out


def sector_unitary(c: Circuit, n: int, mode: str = "analytic") -> np.ndarray:
    """Matrix of the whole circuit on the n-particle sector (enumerate_basis order)."""
    basis = _sector_basis(c.m, n)
    return operator_matrix(lambda v: run_circuit(c, v, mode), basis)


def element_unitary(e: OpticalElement, m: int, n: int, phi: float, mode: str = "analytic") -> np.ndarray:
    return sector_unitary(Circuit(m, phi, [e]), n, mode)
