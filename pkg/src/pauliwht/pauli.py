"""Pauli-term data model and label conversions.

A Pauli string on n qubits is indexed by the bit pair (r, s): qubit j
carries an X factor when bit j of r is set and a Z factor when bit j of
s is set.  Both set means Y, because the i**(r_j & s_j) phase that turns
X@Z into Y is folded into the string itself; strings therefore never
carry a residual global phase.
"""

from dataclasses import dataclass, field

import numpy as np

from .bits import MAX_QUBITS

# per-qubit letter for the bit pair (x_bit, z_bit)
_LETTER = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {letter: bits for bits, letter in _LETTER.items()}


def _check_bit_pair(r: int, s: int, n: int) -> None:
    if not 0 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count {n} outside supported range 0..{MAX_QUBITS}")
    if not 0 <= r < 1 << n or not 0 <= s < 1 << n:
        raise ValueError(f"bit pair (r={r}, s={s}) out of range for n={n}")


def label_of(r: int, s: int, n: int) -> str:
    """Length-n label over {I, X, Y, Z} for the bit pair (r, s).

    Qubit j carries bit weight 2**j; the leftmost character is qubit n-1.
    """
    _check_bit_pair(r, s, n)
    return "".join(
        _LETTER[(r >> j) & 1, (s >> j) & 1] for j in range(n - 1, -1, -1)
    )


def parse_label(label: str) -> tuple[int, int, int]:
    """Inverse of label_of: returns (r, s, n) for a nonempty label."""
    if not label:
        raise ValueError("empty Pauli label")
    if len(label) > MAX_QUBITS:
        raise ValueError(f"label {label!r} longer than {MAX_QUBITS} qubits")
    r = s = 0
    for pos, letter in enumerate(label):
        try:
            x, z = _BITS[letter]
        except KeyError:
            raise ValueError(
                f"invalid Pauli letter {letter!r} at position {pos}"
            ) from None
        j = len(label) - 1 - pos
        r |= x << j
        s |= z << j
    return r, s, len(label)


@dataclass(frozen=True)
class PauliTerm:
    """One Pauli string with its complex weight."""

    r: int
    s: int
    coeff: complex
    n: int

    def __post_init__(self):
        _check_bit_pair(self.r, self.s, self.n)

    @property
    def label(self) -> str:
        return label_of(self.r, self.s, self.n)


@dataclass(frozen=True)
class SymplecticRep:
    """(x, z) bit-vector encoding of a Pauli string plus a power-of-i phase."""

    x_bits: int
    z_bits: int
    phase_exponent: int = 0


def symplectic_of(term: PauliTerm) -> SymplecticRep:
    """Symplectic form of the term's string.

    The i**|r & s| factor is part of the string's definition, so the
    residual phase exponent is always 0; the coefficient is carried
    separately on the term.
    """
    return SymplecticRep(x_bits=term.r, z_bits=term.s, phase_exponent=0)


@dataclass
class TermList:
    """Threshold-filtered, (r, s)-ordered terms of one decomposition."""

    n: int
    terms: list[PauliTerm] = field(default_factory=list)
    threshold: float = 0.0

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def labels(self) -> list[str]:
        return [t.label for t in self.terms]

    def to_dense(self) -> np.ndarray:
        """Dense coefficient matrix; entries absent from the list are zero."""
        size = 1 << self.n
        out = np.zeros((size, size), dtype=np.complex128)
        for t in self.terms:
            out[t.r, t.s] = t.coeff
        return out
