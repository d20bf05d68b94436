"""Symmetry classification and checks on the coefficient structure.

Hermitian inputs give real coefficients; symmetric inputs (real or
complex) force the coefficient at (r, s) to vanish whenever |r & s| is
odd, which pins 2**(n-1) * (2**n - 1) entries to zero.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .bits import MAX_QUBITS
from .transform import qubit_count

DEFAULT_TOL = 1e-12


class SymmetryClass(enum.Enum):
    REAL_SYMMETRIC = "real_symmetric"
    HERMITIAN = "hermitian"
    COMPLEX_SYMMETRIC = "complex_symmetric"
    GENERAL = "general"


def classify(a: np.ndarray, tol: float = DEFAULT_TOL) -> SymmetryClass:
    """Most specific symmetry class of a, by max elementwise deviation."""
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    qubit_count(a)
    symmetric = np.max(np.abs(a - a.T)) <= tol
    if symmetric and np.max(np.abs(a.imag)) <= tol:
        return SymmetryClass.REAL_SYMMETRIC
    if np.max(np.abs(a - a.conj().T)) <= tol:
        return SymmetryClass.HERMITIAN
    if symmetric:
        return SymmetryClass.COMPLEX_SYMMETRIC
    return SymmetryClass.GENERAL


def expected_zero_count(n: int) -> int:
    """Number of (r, s) pairs with odd |r & s|: 2**(n-1) * (2**n - 1)."""
    return ((1 << n) >> 1) * ((1 << n) - 1)


def _odd_overlap_mask(n: int) -> np.ndarray:
    idx = np.arange(1 << n)
    return (np.bitwise_count(idx[:, None] & idx[None, :]) & 1).astype(bool)


def forbidden_positions(n: int) -> set[tuple[int, int]]:
    """All (r, s) with odd |r & s|; coefficients there vanish for symmetric inputs.

    The set has 2**(n-1) * (2**n - 1) elements, so materialising it is
    only sensible for modest n.
    """
    if not 0 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count {n} outside supported range 0..{MAX_QUBITS}")
    return {(int(r), int(s)) for r, s in np.argwhere(_odd_overlap_mask(n))}


@dataclass
class StructureReport:
    """Measured maxima from check_structure, kept for diagnosability."""

    symmetry: SymmetryClass
    tol: float
    max_imag_coeff: float
    max_forbidden_coeff: float
    zero_pattern_count: int
    expected_zeros: int
    passed: bool


def check_structure(
    c: np.ndarray,
    symmetry: SymmetryClass,
    tol: float = DEFAULT_TOL,
) -> StructureReport:
    """Verify that a coefficient matrix obeys the structure its input class implies.

    Hermitian inputs require all coefficients real within tol; symmetric
    inputs require (near-)zeros on every odd-|r & s| position, and real
    symmetric inputs require both.  The general class passes vacuously.
    """
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    n = qubit_count(c)
    mask = _odd_overlap_mask(n)
    forbidden = np.abs(c[mask])
    max_forbidden = float(forbidden.max()) if forbidden.size else 0.0
    zero_count = int(np.count_nonzero(forbidden <= tol)) if forbidden.size else 0
    max_imag = float(np.max(np.abs(c.imag)))

    if symmetry is SymmetryClass.HERMITIAN:
        passed = max_imag <= tol
    elif symmetry is SymmetryClass.REAL_SYMMETRIC:
        passed = max_imag <= tol and max_forbidden <= tol
    elif symmetry is SymmetryClass.COMPLEX_SYMMETRIC:
        passed = max_forbidden <= tol
    else:
        passed = True

    expected = (
        expected_zero_count(n)
        if symmetry in (SymmetryClass.REAL_SYMMETRIC, SymmetryClass.COMPLEX_SYMMETRIC)
        else 0
    )
    return StructureReport(
        symmetry=symmetry,
        tol=tol,
        max_imag_coeff=max_imag,
        max_forbidden_coeff=max_forbidden,
        zero_pattern_count=zero_count,
        expected_zeros=expected,
        passed=passed,
    )
