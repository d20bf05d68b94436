"""Brute-force reference decomposition used to validate the fast engine.

Everything here goes through dense Pauli matrices or the trace formula
coefficient by coefficient; nothing shares code with the transform
pipeline.  Runtime is O(2**(3n)) for a full decomposition, so the naive
path is capped at 8 qubits.
"""

import numpy as np

from .pauli import _check_bit_pair
from .transform import qubit_count

NAIVE_MAX_QUBITS = 8

_SINGLE = {
    (0, 0): np.eye(2, dtype=np.complex128),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=np.complex128),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=np.complex128),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
}


def materialize(r: int, s: int, n: int) -> np.ndarray:
    """Dense 2**n x 2**n matrix of the Pauli string with bit pair (r, s).

    Kronecker product of the per-qubit matrices, qubit n-1 as the
    leftmost factor.  Every entry is 0, +-1 or +-i and each row holds
    exactly one nonzero.
    """
    _check_bit_pair(r, s, n)
    out = np.ones((1, 1), dtype=np.complex128)
    for j in range(n - 1, -1, -1):
        out = np.kron(out, _SINGLE[(r >> j) & 1, (s >> j) & 1])
    return out


def trace_coefficient(a: np.ndarray, r: int, s: int) -> complex:
    """tr(P @ a) / 2**n for the string P with bit pair (r, s).

    P has its single row-p nonzero at column p ^ r with value
    i**|r & s| * (-1)**|s & (p ^ r)|, so the trace is a single gather.
    """
    n = qubit_count(a)
    _check_bit_pair(r, s, n)
    size = 1 << n
    rows = np.arange(size)
    cols = rows ^ r
    signs = 1 - 2 * (np.bitwise_count(s & cols) & 1).astype(np.int64)
    phase = 1j ** ((r & s).bit_count() & 3)
    return complex(phase * np.sum(signs * a[cols, rows]) / size)


def naive_decompose(a: np.ndarray) -> np.ndarray:
    """All 4**n coefficients via trace_coefficient, O(2**(3n)) work."""
    n = qubit_count(a)
    if n > NAIVE_MAX_QUBITS:
        raise ValueError(
            f"naive decomposition is capped at {NAIVE_MAX_QUBITS} qubits, got n={n}"
        )
    size = 1 << n
    out = np.empty((size, size), dtype=np.complex128)
    for r in range(size):
        for s in range(size):
            out[r, s] = trace_coefficient(a, r, s)
    return out
