"""Deterministic matrix sampling on a splitmix64 stream.

Benchmarks and fixtures must reproduce bitwise across platforms and
Python versions, so the generator is pinned to splitmix64 (the 64-bit
golden-ratio counter fed through two xor-multiply mixing rounds) instead
of any process-global default.
"""

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4B9F9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK = (1 << 64) - 1


def _mix(z):
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def splitmix64(seed: int, count: int) -> np.ndarray:
    """First `count` outputs of the splitmix64 stream for `seed`."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        return _mix(np.uint64(seed & _MASK) + idx * _GOLDEN)


def derive_seed(seed: int, *parts: int) -> int:
    """Stable sub-stream seed for (seed, *parts); parts must be >= 0."""
    z = np.uint64(seed & _MASK)
    with np.errstate(over="ignore"):
        for p in parts:
            z = _mix(z + np.uint64((int(p) + 1) & _MASK) * _GOLDEN)
    return int(z)


def uniform_symmetric(seed: int, count: int) -> np.ndarray:
    """`count` doubles uniform on [-1, 1); exact power-of-two scalings only."""
    bits = splitmix64(seed, count)
    u = (bits >> np.uint64(11)).astype(np.float64) * 2.0**-53
    return 2.0 * u - 1.0


def random_complex(n: int, seed: int) -> np.ndarray:
    """General 2**n square matrix; entry re/im parts uniform on [-1, 1)."""
    size = 1 << n
    u = uniform_symmetric(seed, 2 * size * size)
    return (u[: size * size] + 1j * u[size * size :]).reshape(size, size)


def random_hermitian(n: int, seed: int) -> np.ndarray:
    """(B + B†)/2 for random B; exactly Hermitian in double precision."""
    b = random_complex(n, seed)
    return (b + b.conj().T) / 2


def random_real_symmetric(n: int, seed: int) -> np.ndarray:
    b = random_complex(n, seed)
    return ((b.real + b.real.T) / 2).astype(np.complex128)


def random_complex_symmetric(n: int, seed: int) -> np.ndarray:
    b = random_complex(n, seed)
    return (b + b.T) / 2
