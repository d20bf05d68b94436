"""Pauli-string decomposition via an in-place fast Walsh-Hadamard pipeline.

Any 2**n x 2**n complex matrix equals a weighted sum of the 4**n Pauli
strings; decompose() finds all weights in O(N^2 log N) time by permuting
the matrix, Walsh-Hadamard-transforming its rows and applying elementwise
phase factors, all in place.  reconstruct() is its exact inverse.
"""

__version__ = "0.1.0"

from .bits import MAX_QUBITS, hadamard_entry, hamming_weight, parity_of_and
from .oracle import materialize, naive_decompose, trace_coefficient
from .matrix_io import read_matrix, read_terms, write_matrix, write_terms
from .pauli import (
    PauliTerm,
    SymplecticRep,
    TermList,
    label_of,
    parse_label,
    symplectic_of,
)
from .rand import random_complex, random_hermitian
from .structure import (
    StructureReport,
    SymmetryClass,
    check_structure,
    classify,
    forbidden_positions,
)
from .transform import (
    OpCounters,
    apply_prefactors_in_place,
    decompose,
    decompose_to_terms,
    fwht_rows_in_place,
    get_workers,
    qubit_count,
    reconstruct,
    set_workers,
    xor_permute_in_place,
)

__all__ = [
    "MAX_QUBITS",
    "OpCounters",
    "PauliTerm",
    "StructureReport",
    "SymmetryClass",
    "SymplecticRep",
    "TermList",
    "apply_prefactors_in_place",
    "check_structure",
    "classify",
    "decompose",
    "decompose_to_terms",
    "forbidden_positions",
    "fwht_rows_in_place",
    "get_workers",
    "hadamard_entry",
    "hamming_weight",
    "label_of",
    "materialize",
    "naive_decompose",
    "parity_of_and",
    "parse_label",
    "qubit_count",
    "random_complex",
    "random_hermitian",
    "read_matrix",
    "read_terms",
    "reconstruct",
    "set_workers",
    "symplectic_of",
    "trace_coefficient",
    "write_matrix",
    "write_terms",
    "xor_permute_in_place",
]
