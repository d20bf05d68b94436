"""In-place Pauli decomposition engine.

decompose() rewrites a 2**n x 2**n complex matrix into its Pauli-string
coefficients through three in-place phases:

1. XOR permutation: entry (r, q) takes the old value at (r ^ q, q), so
   each XOR-diagonal of the matrix becomes a row.
2. Fast Walsh-Hadamard transform of every row (butterflies only, no
   multiplications).
3. Elementwise prefactor (-i)**|r & s| / 2**n, the normalisation fused
   with the phase that turns X@Z products into proper Pauli letters.

reconstruct() runs the same phases backwards.  Both overwrite their
input: callers that still need the original matrix must copy it first.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bits import MAX_QUBITS
from .pauli import PauliTerm, TermList

# (-i)**k and i**k for k = |r & s| mod 4; exact complex constants
_FORWARD_PHASE = np.array([1, -1j, -1, 1j], dtype=np.complex128)
_BACKWARD_PHASE = np.array([1, 1j, -1, -1j], dtype=np.complex128)


@dataclass
class OpCounters:
    """Tally of the elementary operations performed by the kernels."""

    swaps: int = 0
    complex_adds: int = 0
    complex_subs: int = 0
    complex_muls: int = 0

    def reset(self) -> None:
        self.swaps = self.complex_adds = self.complex_subs = self.complex_muls = 0


def qubit_count(m: np.ndarray) -> int:
    """n for a square matrix of dimension 2**n; rejects anything else."""
    if not isinstance(m, np.ndarray) or m.ndim != 2 or m.shape[0] != m.shape[1]:
        shape = getattr(m, "shape", None)
        raise ValueError(f"expected a square matrix, got shape {shape}")
    size = m.shape[0]
    if size < 1 or size & (size - 1):
        raise ValueError(f"matrix dimension {size} is not a power of two")
    n = size.bit_length() - 1
    if n > MAX_QUBITS:
        raise ValueError(
            f"matrix dimension {size} exceeds the {MAX_QUBITS}-qubit limit"
        )
    return n


def _check_working(m: np.ndarray) -> int:
    n = qubit_count(m)
    if m.dtype != np.complex128:
        raise ValueError(f"in-place transform needs complex128 data, got {m.dtype}")
    if not m.flags.c_contiguous or not m.flags.writeable:
        raise ValueError("in-place transform needs a writable C-contiguous buffer")
    return n


def xor_permute_in_place(m: np.ndarray, counters: OpCounters | None = None) -> np.ndarray:
    """Permute m so entry (r, q) holds the old entry (r ^ q, q).

    Within each column the map r <-> r ^ q is an involution, realised as
    one swap per unordered pair; applying the permutation twice restores
    the matrix.
    """
    _check_working(m)
    swaps = _kernels.xor_permute(m)
    if counters is not None:
        counters.swaps += int(swaps)
    return m


def fwht_rows_in_place(m: np.ndarray, counters: OpCounters | None = None) -> np.ndarray:
    """Replace every row v by v @ H, the unnormalised Walsh-Hadamard transform.

    H is the n-fold tensor power of [[1, 1], [1, -1]]; the butterfly
    network uses additions and subtractions only.  Applying it twice
    scales the matrix by 2**n.
    """
    _check_working(m)
    adds, subs = _kernels.fwht_rows(m)
    if counters is not None:
        counters.complex_adds += int(adds)
        counters.complex_subs += int(subs)
    return m


def apply_prefactors_in_place(m: np.ndarray, counters: OpCounters | None = None) -> np.ndarray:
    """Multiply entry (r, s) by (-i)**|r & s| / 2**n."""
    n = _check_working(m)
    table = _FORWARD_PHASE * 2.0**-n  # power-of-two scale, exact
    muls = _kernels.apply_phase_table(m, table)
    if counters is not None:
        counters.complex_muls += int(muls)
    return m


def decompose(a: np.ndarray, counters: OpCounters | None = None) -> np.ndarray:
    """Overwrite a with its Pauli coefficients and return it.

    Afterwards entry (r, s) is the coefficient of the Pauli string with
    X-bits r and Z-bits s.  The returned array is the input object.
    """
    xor_permute_in_place(a, counters)
    fwht_rows_in_place(a, counters)
    apply_prefactors_in_place(a, counters)
    return a


def reconstruct(c: np.ndarray, counters: OpCounters | None = None) -> np.ndarray:
    """Overwrite the coefficient matrix c with the matrix it encodes.

    Runs decompose backwards: undo the prefactors (the 2**n un-scaling
    cancels the 1/2**n of the inverse Walsh-Hadamard transform, leaving a
    pure i**|r & s| phase), transform the rows again, then apply the XOR
    permutation, which is its own inverse.
    """
    n = _check_working(c)
    muls = _kernels.apply_phase_table(c, _BACKWARD_PHASE)
    if counters is not None:
        counters.complex_muls += int(muls)
    fwht_rows_in_place(c, counters)
    xor_permute_in_place(c, counters)
    return c


def decompose_to_terms(
    a: np.ndarray,
    threshold: float = 0.0,
    counters: OpCounters | None = None,
) -> TermList:
    """Decompose a in place and keep the terms with |coeff| > threshold.

    Terms come out sorted by (r, s); the exact zeros forced by symmetric
    inputs never survive any threshold >= 0.
    """
    if threshold < 0:
        raise ValueError(f"threshold must be nonnegative, got {threshold}")
    n = _check_working(a)
    decompose(a, counters)
    terms = [
        PauliTerm(int(r), int(s), complex(a[r, s]), n)
        for r, s in np.argwhere(np.abs(a) > threshold)
    ]
    return TermList(n=n, terms=terms, threshold=float(threshold))


def set_workers(count: int) -> None:
    """Cap the kernel worker threads; clamped to the platform maximum."""
    import numba

    numba.set_num_threads(max(1, min(int(count), numba.config.NUMBA_NUM_THREADS)))


def get_workers() -> int:
    import numba

    return numba.get_num_threads()
