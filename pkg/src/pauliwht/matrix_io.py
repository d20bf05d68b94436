"""Bit-exact file formats for matrices and term lists.

Binary matrix format (PDMX):
    bytes 0-3   magic "PDMX"
    bytes 4-5   version, little-endian u16, currently 1
    bytes 6-7   qubit count n, little-endian u16
    payload     row-major (re, im) IEEE-754 double pairs, little-endian,
                exactly 16 * 4**n bytes

Text matrix format: a line with the decimal dimension N (a power of
two), then N lines of N whitespace-separated complex literals such as
"1.5-2j" (bare reals allowed).

Term CSV: header "label,r,s,re,im", one line per term in (r, s) order.
Floats are written in their shortest round-tripping decimal form, so a
read-back is value-exact.  Non-finite entries are rejected everywhere.
"""

import math
import struct

import numpy as np

from .bits import MAX_QUBITS
from .pauli import PauliTerm, TermList, label_of
from .transform import qubit_count

MAGIC = b"PDMX"
VERSION = 1
_HEADER = struct.Struct("<4sHH")
TERMS_HEADER = "label,r,s,re,im"


def _fmt_float(x: float) -> str:
    """Shortest decimal that round-trips, with integral values undotted."""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def _fmt_complex(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{_fmt_float(z.real)}{sign}{_fmt_float(abs(z.imag))}j"


def _check_finite(m: np.ndarray) -> None:
    if not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")


def write_matrix(m: np.ndarray, sink, format: str = "binary") -> None:
    """Serialise m to sink; binary sinks take bytes, text sinks take str."""
    n = qubit_count(m)
    m = np.ascontiguousarray(m, dtype=np.complex128)
    _check_finite(m)
    if format == "binary":
        sink.write(_HEADER.pack(MAGIC, VERSION, n))
        sink.write(m.astype("<c16", copy=False).tobytes())
    elif format == "text":
        sink.write(f"{m.shape[0]}\n")
        for row in m:
            sink.write(" ".join(_fmt_complex(z) for z in row) + "\n")
    else:
        raise ValueError(f"unknown matrix format {format!r}")


def read_matrix(source, format: str = "binary") -> np.ndarray:
    """Parse a matrix written by write_matrix; validates shape and finiteness."""
    if format == "binary":
        return _read_binary(source)
    if format == "text":
        return _read_text(source)
    raise ValueError(f"unknown matrix format {format!r}")


def _read_binary(source) -> np.ndarray:
    header = source.read(_HEADER.size)
    if len(header) < _HEADER.size:
        raise ValueError("truncated header: not a PDMX matrix file")
    magic, version, n = _HEADER.unpack(header)
    if magic != MAGIC:
        raise ValueError(f"bad magic {magic!r}: not a PDMX matrix file")
    if version != VERSION:
        raise ValueError(f"unsupported PDMX version {version}")
    if n > MAX_QUBITS:
        raise ValueError(f"qubit count {n} exceeds the {MAX_QUBITS}-qubit limit")
    size = 1 << n
    expected = 16 * size * size
    payload = source.read(expected + 1)
    if len(payload) < expected:
        raise ValueError(
            f"truncated payload: expected {expected} bytes, got {len(payload)}"
        )
    if len(payload) > expected:
        raise ValueError("trailing data after matrix payload")
    m = np.frombuffer(payload, dtype="<c16").reshape(size, size)
    m = m.astype(np.complex128)  # native byte order, writable
    _check_finite(m)
    return m


def _read_text(source) -> np.ndarray:
    first = source.readline()
    if not first.strip():
        raise ValueError("empty matrix file")
    try:
        size = int(first)
    except ValueError:
        raise ValueError(f"line 1: bad dimension {first.strip()!r}") from None
    if size < 1 or size & (size - 1):
        raise ValueError(f"line 1: dimension {size} is not a power of two")
    if size.bit_length() - 1 > MAX_QUBITS:
        raise ValueError(f"dimension {size} exceeds the {MAX_QUBITS}-qubit limit")
    out = np.empty((size, size), dtype=np.complex128)
    for i in range(size):
        line = source.readline()
        if not line:
            raise ValueError(f"line {i + 2}: file ends before row {i + 1} of {size}")
        tokens = line.split()
        if len(tokens) != size:
            raise ValueError(
                f"line {i + 2}: expected {size} entries, got {len(tokens)}"
            )
        for j, token in enumerate(tokens):
            try:
                z = complex(token)
            except ValueError:
                raise ValueError(
                    f"line {i + 2}, column {j + 1}: bad complex literal {token!r}"
                ) from None
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError(f"line {i + 2}, column {j + 1}: non-finite entry")
            out[i, j] = z
    if source.read().strip():
        raise ValueError("trailing data after matrix rows")
    return out


def write_terms(terms: TermList, sink) -> None:
    """Term CSV: header plus one "label,r,s,re,im" line per term."""
    sink.write(TERMS_HEADER + "\n")
    for t in terms:
        if not (math.isfinite(t.coeff.real) and math.isfinite(t.coeff.imag)):
            raise ValueError(f"non-finite coefficient on term (r={t.r}, s={t.s})")
        sink.write(
            f"{label_of(t.r, t.s, terms.n)},{t.r},{t.s},"
            f"{_fmt_float(t.coeff.real)},{_fmt_float(t.coeff.imag)}\n"
        )


def read_terms(source) -> TermList:
    """Parse a term CSV; labels are cross-checked against the (r, s) bits.

    A header-only file yields the empty list with n = 0 (it reconstructs
    the 1x1 zero matrix).  Zero coefficients are accepted: the threshold
    filter applies when a decomposition is taken, not on read.
    """
    header = source.readline()
    if header.strip() != TERMS_HEADER:
        raise ValueError(f"bad term-file header {header.strip()!r}")
    n = None
    seen: dict[tuple[int, int], complex] = {}
    for lineno, raw in enumerate(source, start=2):
        line = raw.strip()
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != 5:
            raise ValueError(f"line {lineno}: expected 5 fields, got {len(fields)}")
        label, r_text, s_text, re_text, im_text = fields
        try:
            r, s = int(r_text), int(s_text)
        except ValueError:
            raise ValueError(f"line {lineno}: bad bit indices {r_text!r}, {s_text!r}") from None
        if len(label) > MAX_QUBITS:
            raise ValueError(f"line {lineno}: label longer than {MAX_QUBITS} qubits")
        if n is None:
            n = len(label)
        elif len(label) != n:
            raise ValueError(
                f"line {lineno}: label width {len(label)} differs from {n}"
            )
        if not 0 <= r < 1 << n or not 0 <= s < 1 << n:
            raise ValueError(f"line {lineno}: bits (r={r}, s={s}) out of range for n={n}")
        if label != label_of(r, s, n):
            raise ValueError(
                f"line {lineno}: label {label!r} does not match bits (r={r}, s={s})"
            )
        try:
            coeff = complex(float(re_text), float(im_text))
        except ValueError:
            raise ValueError(
                f"line {lineno}: bad coefficient {re_text!r}, {im_text!r}"
            ) from None
        if not (math.isfinite(coeff.real) and math.isfinite(coeff.imag)):
            raise ValueError(f"line {lineno}: non-finite coefficient")
        if (r, s) in seen:
            raise ValueError(f"line {lineno}: duplicate term (r={r}, s={s})")
        seen[(r, s)] = coeff
    if n is None:
        return TermList(n=0, terms=[], threshold=0.0)
    terms = [PauliTerm(r, s, coeff, n) for (r, s), coeff in sorted(seen.items())]
    return TermList(n=n, terms=terms, threshold=0.0)
