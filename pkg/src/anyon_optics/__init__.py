"""Exact linear optics of 1D fermionic anyons, dual-rail encoded gates and
two-qubit entangling power."""

from .entangling import LocalInvariants, ep_formula, local_invariants, to_magic_basis
from .encoded import (
    CPhiGate,
    LogicalLayout,
    SingleQubitSpec,
    apply_encoded_two_qubit,
    c_phi_reference,
    compile_single_qubit,
    decode_logical,
    encode_logical,
    search_decomposition,
)
from .exceptions import (
    AnyonOpticsError,
    CodeSpaceError,
    ConsistencyError,
    DocumentError,
    InvalidArgumentError,
    PreconditionError,
    ResourceLimitError,
)
from .fock import (
    AlgebraConfig,
    FockVector,
    apply_annihilation,
    apply_creation,
    enumerate_basis,
    verify_deformed_relations,
)
from .optics import (
    Circuit,
    OpticalElement,
    apply_beam_splitter,
    apply_phase_shifter,
    build_element_matrix,
    evolve_exact,
    run_circuit,
)
from .oracles import free_fermion_amplitude, hardcore_boson_evolve, single_particle_matrix

__version__ = "0.1.0"

__all__ = [
    "AlgebraConfig",
    "AnyonOpticsError",
    "CPhiGate",
    "Circuit",
    "CodeSpaceError",
    "ConsistencyError",
    "DocumentError",
    "FockVector",
    "InvalidArgumentError",
    "LocalInvariants",
    "LogicalLayout",
    "OpticalElement",
    "PreconditionError",
    "ResourceLimitError",
    "SingleQubitSpec",
    "apply_annihilation",
    "apply_beam_splitter",
    "apply_creation",
    "apply_encoded_two_qubit",
    "apply_phase_shifter",
    "build_element_matrix",
    "c_phi_reference",
    "compile_single_qubit",
    "decode_logical",
    "encode_logical",
    "enumerate_basis",
    "ep_formula",
    "evolve_exact",
    "free_fermion_amplitude",
    "hardcore_boson_evolve",
    "local_invariants",
    "run_circuit",
    "search_decomposition",
    "single_particle_matrix",
    "to_magic_basis",
    "verify_deformed_relations",
]
