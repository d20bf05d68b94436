"""Numba kernels for the three in-place transform phases.

Each kernel mutates the matrix buffer directly and returns a tally of the
elementary operations it performed.  Work is partitioned so that results
are bitwise independent of the thread count: the permutation runs per
column, the butterfly network runs per row with a fixed stage order, and
the phase pass is elementwise.
"""

import warnings

import numpy as np

# upstream noise when the optional TBB layer is too old; omp/workqueue is used
warnings.filterwarnings(
    "ignore", message="The TBB threading layer requires TBB version"
)

from numba import njit, prange  # noqa: E402


@njit(cache=True, parallel=True)
def xor_permute(a):
    """a[r, q] <- a[r ^ q, q] via one swap per unordered pair; returns swaps."""
    size = a.shape[0]
    swaps = 0
    for q in prange(size):
        col_swaps = 0
        for r in range(size):
            rq = r ^ q
            if r < rq:
                tmp = a[r, q]
                a[r, q] = a[rq, q]
                a[rq, q] = tmp
                col_swaps += 1
        swaps += col_swaps
    return swaps


@njit(cache=True, parallel=True)
def fwht_rows(a):
    """Unnormalised Walsh-Hadamard transform of every row, in place.

    Stages run h = 1, 2, ..., size/2 sequentially within each row, so the
    floating-point summation order is fixed.  Returns (adds, subs).
    """
    n_rows = a.shape[0]
    size = a.shape[1]
    adds = 0
    subs = 0
    for r in prange(n_rows):
        row_adds = 0
        row_subs = 0
        h = 1
        while h < size:
            j = 0
            while j < size:
                for k in range(j, j + h):
                    u = a[r, k]
                    v = a[r, k + h]
                    a[r, k] = u + v
                    a[r, k + h] = u - v
                    row_adds += 1
                    row_subs += 1
                j += 2 * h
            h *= 2
        adds += row_adds
        subs += row_subs
    return adds, subs


@njit(cache=True, parallel=True)
def apply_phase_table(a, table):
    """a[r, s] *= table[|r & s| mod 4]; returns the multiply count.

    The SWAR popcount below stays exact for indices up to 16 bits, well
    inside the signed-64-bit intermediates numba uses here.
    """
    n_rows = a.shape[0]
    n_cols = a.shape[1]
    muls = 0
    for r in prange(n_rows):
        row_muls = 0
        for s in range(n_cols):
            x = r & s
            x = x - ((x >> 1) & 0x5555555555555555)
            x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
            x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
            weight = (x * 0x0101010101010101) >> 56
            a[r, s] = a[r, s] * table[weight & 3]
            row_muls += 1
        muls += row_muls
    return muls


def warm_up():
    """Force JIT compilation of all kernels on a 2x2 scratch matrix."""
    scratch = np.zeros((2, 2), dtype=np.complex128)
    xor_permute(scratch)
    fwht_rows(scratch)
    apply_phase_table(scratch, np.ones(4, dtype=np.complex128))
