"""Occupation-number basis and the deformed (anyonic) ladder operators.

Modes are 1-based. A basis state is a tuple of 0/1 occupations, mode 1 first,
and stands for the normal-ordered product a_1^{n_1} ... a_m^{n_m} acting on the
vacuum (creation operators with the lowest index leftmost).

The anyonic operators are obtained from canonical fermions through the
generalized Jordan-Wigner string exp(i phi sum_{k<i} N_k), which gives

    a_i^dag |..0_i..> = (-e^{-i phi})^L |..1_i..>,
    a_i     |..1_i..> = (-e^{+i phi})^L |..0_i..>,      L = sum_{k<i} n_k.

phi = 0 recovers canonical fermions and phi = pi hard-core bosons.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

import numpy as np

from .exceptions import InvalidArgumentError, ResourceLimitError

BasisState = Tuple[int, ...]

PRUNE_TOL = 1e-15
MAX_DENSE_MODES = 8


@dataclass(frozen=True)
class AlgebraConfig:
    """Mode count and statistical angle of the deformed algebra."""

    m: int
    phi: float = 0.0

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise InvalidArgumentError(f"mode count must be a positive integer, got {self.m!r}")
        if not (0.0 <= self.phi <= math.pi):
            raise InvalidArgumentError(f"phi must lie in [0, pi], got {self.phi!r}")

    def check_mode(self, i: int) -> None:
        if not (1 <= i <= self.m):
            raise InvalidArgumentError(f"mode index {i} outside 1..{self.m}")


def epsilon(i: int, j: int) -> int:
    """Lattice-order sign: +1 if i < j, 0 if i == j, -1 if i > j."""
    return (i < j) - (i > j)


def basis_label(bits: Sequence[int]) -> str:
    """Ket label with mode 1 leftmost, e.g. (0, 1, 1, 0) -> '0110'."""
    return "".join(str(int(b)) for b in bits)


def parse_label(label: str) -> BasisState:
    if not label or any(c not in "01" for c in label):
        raise InvalidArgumentError(f"not an occupation label: {label!r}")
    return tuple(int(c) for c in label)


def enumerate_basis(m: int, n: int) -> List[BasisState]:
    """All m-mode occupations holding exactly n particles.

    Ordered lexicographically descending by bitstring, so for m=4, n=2 the
    order is 1100, 1010, 1001, 0110, 0101, 0011.
    """
    if m < 0 or n < 0 or n > m:
        raise InvalidArgumentError(f"need 0 <= n <= m, got m={m}, n={n}")
    states = []
    for occupied in itertools.combinations(range(m), n):
        bits = [0] * m
        for k in occupied:
            bits[k] = 1
        states.append(tuple(bits))
    # combinations() yields occupied-index tuples in lexicographic order,
    # which is exactly descending order of the bitstrings.
    return states


def full_basis(m: int) -> List[BasisState]:
    """Every occupation of m modes, descending bitstring order (2^m states)."""
    return [tuple(bits) for bits in itertools.product((1, 0), repeat=m)]


@dataclass(frozen=True, eq=False)
class FockVector:
    """Sparse complex amplitudes over occupation basis states of ``m`` modes."""

    m: int
    amplitudes: Mapping[BasisState, complex] = field(default_factory=dict)

    def __post_init__(self):
        for bits in self.amplitudes:
            if len(bits) != self.m:
                raise InvalidArgumentError(
                    f"basis state {bits} does not have {self.m} modes")

    @classmethod
    def basis(cls, bits: Sequence[int]) -> "FockVector":
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise InvalidArgumentError(f"occupations must be 0 or 1, got {bits}")
        return cls(len(bits), {bits: 1.0 + 0j})

    @classmethod
    def from_terms(cls, m: int, terms: Iterable[Tuple[BasisState, complex]]) -> "FockVector":
        """Accumulate (state, amplitude) pairs and prune negligible entries."""
        acc: Dict[BasisState, complex] = {}
        for bits, amp in terms:
            acc[bits] = acc.get(bits, 0j) + amp
        return cls(m, {b: a for b, a in acc.items() if abs(a) > PRUNE_TOL})

    @classmethod
    def from_dense(cls, vec: np.ndarray, basis: Sequence[BasisState]) -> "FockVector":
        m = len(basis[0]) if basis else 0
        return cls.from_terms(m, zip(basis, (complex(x) for x in vec)))

    def to_dense(self, basis: Sequence[BasisState]) -> np.ndarray:
        index = {b: k for k, b in enumerate(basis)}
        out = np.zeros(len(basis), dtype=complex)
        for bits, amp in self.amplitudes.items():
            if bits not in index:
                raise InvalidArgumentError(f"state {basis_label(bits)} not in the given basis")
            out[index[bits]] = amp
        return out

    def __getitem__(self, bits) -> complex:
        if isinstance(bits, str):
            bits = parse_label(bits)
        return self.amplitudes.get(tuple(bits), 0j)

    def __iter__(self) -> Iterator[BasisState]:
        return iter(self.amplitudes)

    def __len__(self) -> int:
        return len(self.amplitudes)

    def items(self):
        return self.amplitudes.items()

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def particle_numbers(self) -> set:
        return {sum(bits) for bits in self.amplitudes}

    def scaled(self, factor: complex) -> "FockVector":
        return FockVector.from_terms(self.m, ((b, factor * a) for b, a in self.amplitudes.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        if other.m != self.m:
            raise InvalidArgumentError("cannot add vectors over different mode counts")
        return FockVector.from_terms(self.m, itertools.chain(self.items(), other.items()))

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scaled(-1)

    def distance(self, other: "FockVector") -> float:
        """Largest absolute amplitude difference."""
        keys = set(self.amplitudes) | set(other.amplitudes)
        return max((abs(self[k] - other[k]) for k in keys), default=0.0)

    def __repr__(self) -> str:
        terms = ", ".join(f"{basis_label(b)}: {a:.6g}" for b, a in sorted(self.items(), reverse=True))
        return f"FockVector(m={self.m}, {{{terms}}})"


def _check(v: FockVector, i: int, cfg: AlgebraConfig) -> None:
    if v.m != cfg.m:
        raise InvalidArgumentError(f"vector has {v.m} modes, algebra has {cfg.m}")
    cfg.check_mode(i)


def apply_creation(v: FockVector, i: int, cfg: AlgebraConfig) -> FockVector:
    """Apply a_i^dag."""
    _check(v, i, cfg)
    step = -cmath.exp(-1j * cfg.phi)
    terms = []
    for bits, amp in v.items():
        if bits[i - 1]:
            continue
        string = sum(bits[: i - 1])
        out = bits[: i - 1] + (1,) + bits[i:]
        terms.append((out, amp * step ** string))
    return FockVector.from_terms(v.m, terms)


def apply_annihilation(v: FockVector, i: int, cfg: AlgebraConfig) -> FockVector:
    """Apply a_i."""
    _check(v, i, cfg)
    step = -cmath.exp(1j * cfg.phi)
    terms = []
    for bits, amp in v.items():
        if not bits[i - 1]:
            continue
        string = sum(bits[: i - 1])
        out = bits[: i - 1] + (0,) + bits[i:]
        terms.append((out, amp * step ** string))
    return FockVector.from_terms(v.m, terms)


def apply_number(v: FockVector, i: int, cfg: AlgebraConfig) -> FockVector:
    """Apply N_i = a_i^dag a_i."""
    return apply_creation(apply_annihilation(v, i, cfg), i, cfg)


def operator_matrix(op, basis: Sequence[BasisState], target_basis: Sequence[BasisState] = None) -> np.ndarray:
    """Dense matrix of a linear map ``op: FockVector -> FockVector``.

    Column k is ``op`` applied to ``basis[k]``; rows follow ``target_basis``
    (defaults to ``basis``).
    """
    target_basis = basis if target_basis is None else target_basis
    mat = np.zeros((len(target_basis), len(basis)), dtype=complex)
    for k, bits in enumerate(basis):
        mat[:, k] = op(FockVector.basis(bits)).to_dense(target_basis)
    return mat


def ladder_matrices(cfg: AlgebraConfig) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    """Full 2^m-dimensional matrices of every a_i^dag and a_i (lists indexed i-1)."""
    if cfg.m > MAX_DENSE_MODES:
        raise ResourceLimitError(
            f"dense ladder matrices limited to m <= {MAX_DENSE_MODES}, got m={cfg.m}")
    basis = full_basis(cfg.m)
    creators = [operator_matrix(lambda v, i=i: apply_creation(v, i, cfg), basis)
                for i in range(1, cfg.m + 1)]
    annihilators = [operator_matrix(lambda v, i=i: apply_annihilation(v, i, cfg), basis)
                    for i in range(1, cfg.m + 1)]
    return creators, annihilators


@dataclass
class RelationReport:
    m: int
    phi: float
    max_violation: float
    mixed_violation: float
    pair_violation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_violation < self.tol


def verify_deformed_relations(cfg: AlgebraConfig, tol: float = 1e-12) -> RelationReport:
    """Check both families of deformed anticommutation relations entrywise.

        a_i a_j^dag + e^{-i phi eps_ij} a_j^dag a_i = delta_ij
        a_i a_j     + e^{+i phi eps_ij} a_j a_i     = 0
    """
    creators, annihilators = ladder_matrices(cfg)
    dim = 2 ** cfg.m
    eye = np.eye(dim)
    mixed = pair = 0.0
    for i in range(cfg.m):
        for j in range(cfg.m):
            ph = cmath.exp(1j * cfg.phi * epsilon(i, j))
            lhs = annihilators[i] @ creators[j] + creators[j] @ annihilators[i] / ph
            mixed = max(mixed, np.abs(lhs - (eye if i == j else 0)).max())
            lhs = annihilators[i] @ annihilators[j] + ph * annihilators[j] @ annihilators[i]
            pair = max(pair, np.abs(lhs).max())
    return RelationReport(cfg.m, cfg.phi, max(mixed, pair), mixed, pair, tol)
