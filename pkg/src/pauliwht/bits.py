"""Bitwise primitives on n-bit indices."""

# Indices are machine-word unsigned integers; dense storage past 16 qubits
# is out of reach anyway, so larger n is rejected with a clear error.
MAX_QUBITS = 16


def hamming_weight(x: int) -> int:
    """Number of set bits in x."""
    return x.bit_count()


def _hamming_weight_portable(x: int) -> int:
    # reference implementation used to cross-check the builtin popcount
    return bin(x).count("1")


def hadamard_entry(q: int, s: int) -> int:
    """Entry (q, s) of the n-fold Hadamard tensor power: (-1)**|q & s|."""
    return -1 if (q & s).bit_count() & 1 else 1


def parity_of_and(r: int, s: int) -> int:
    """|r & s| mod 2."""
    return (r & s).bit_count() & 1
