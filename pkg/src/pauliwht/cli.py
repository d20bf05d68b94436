"""Command-line interface: decompose, reconstruct, verify, bench.

Exit codes: 0 success, 1 I/O or data error, 2 usage error,
3 verification failure.
"""

import argparse
import sys
import time

import numpy as np

from . import __version__, matrix_io, oracle, structure, transform
from ._kernels import warm_up
from .rand import (
    derive_seed,
    random_complex,
    random_complex_symmetric,
    random_hermitian,
    random_real_symmetric,
)

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3

VERIFY_TOL = 1e-12
VERIFY_MAX_QUBITS = 8
BENCH_MAX_QUBITS = 14

# input kinds exercised by verify, with the structure class each implies
_VERIFY_KINDS = (
    ("general", random_complex, structure.SymmetryClass.GENERAL),
    ("hermitian", random_hermitian, structure.SymmetryClass.HERMITIAN),
    ("real-symmetric", random_real_symmetric, structure.SymmetryClass.REAL_SYMMETRIC),
    ("complex-symmetric", random_complex_symmetric, structure.SymmetryClass.COMPLEX_SYMMETRIC),
)


def _nonnegative_float(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauliwht",
        description="Pauli-string decomposition of 2^n x 2^n complex matrices.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="decompose a matrix into Pauli terms")
    d.add_argument("input", help="matrix file to decompose")
    d.add_argument("-o", "--output", required=True, help="output file")
    d.add_argument(
        "--input-format", choices=("text", "binary"), default="text",
        help="matrix input format (default text)",
    )
    d.add_argument(
        "--emit", choices=("terms", "dense"), default="terms",
        help="write a term CSV or the dense coefficient matrix (binary)",
    )
    d.add_argument(
        "--threshold", type=_nonnegative_float, default=1e-12,
        help="keep terms with |coeff| > threshold (default 1e-12)",
    )
    d.add_argument("--threads", type=_positive_int, help="cap kernel worker threads")
    d.set_defaults(func=cmd_decompose)

    r = sub.add_parser("reconstruct", help="rebuild the matrix from a term CSV")
    r.add_argument("input", help="term CSV file")
    r.add_argument("-o", "--output", required=True, help="output matrix file")
    r.add_argument(
        "--format", choices=("text", "binary"), default="text",
        help="matrix output format (default text)",
    )
    r.add_argument("--threads", type=_positive_int, help="cap kernel worker threads")
    r.set_defaults(func=cmd_reconstruct)

    v = sub.add_parser(
        "verify", help="cross-check the engine against the brute-force oracle"
    )
    v.add_argument("--n-max", type=_positive_int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=_positive_int, default=10)
    v.add_argument("--threads", type=_positive_int, help="cap kernel worker threads")
    # test hook: perturbs one coefficient so the comparison must fail
    v.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time decompose on random Hermitian matrices")
    b.add_argument("--n-min", type=_positive_int, required=True)
    b.add_argument("--n-max", type=_positive_int, required=True)
    b.add_argument("--repeats", type=_positive_int, default=10)
    b.add_argument("--matrices", type=_positive_int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("-o", "--output", required=True, help="timing CSV file")
    b.add_argument("--threads", type=_positive_int, help="cap kernel worker threads")
    b.set_defaults(func=cmd_bench)

    return parser


def cmd_decompose(args) -> int:
    mode = "rb" if args.input_format == "binary" else "r"
    with open(args.input, mode) as f:
        m = matrix_io.read_matrix(f, args.input_format)
    n = transform.qubit_count(m)
    counters = transform.OpCounters()

    if args.emit == "terms":
        start = time.perf_counter()
        terms = transform.decompose_to_terms(m, args.threshold, counters)
        elapsed = time.perf_counter() - start
        count = len(terms)
        with open(args.output, "w") as f:
            matrix_io.write_terms(terms, f)
    else:
        start = time.perf_counter()
        coeffs = transform.decompose(m, counters)
        elapsed = time.perf_counter() - start
        count = int(np.count_nonzero(np.abs(coeffs) > args.threshold))
        with open(args.output, "wb") as f:
            matrix_io.write_matrix(coeffs, f, "binary")

    print(f"n={n} terms={count} time={elapsed:.6f}s", file=sys.stderr)
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    with open(args.input) as f:
        terms = matrix_io.read_terms(f)
    m = transform.reconstruct(terms.to_dense())
    mode = "wb" if args.format == "binary" else "w"
    with open(args.output, mode) as f:
        matrix_io.write_matrix(m, f, args.format)
    return EXIT_OK


def run_verify(n_max, seed=0, trials=10, corrupt=False, log=None):
    """Compare decompose with the oracle on every input kind.

    Returns (max coefficient deviation, max structure violation).
    """
    warm_up()
    max_dev = 0.0
    max_struct = 0.0
    for n in range(1, n_max + 1):
        for trial in range(trials):
            for kind_index, (name, sampler, sym) in enumerate(_VERIFY_KINDS):
                a = sampler(n, derive_seed(seed, n, trial, kind_index))
                if structure.classify(a, VERIFY_TOL) is not sym:
                    raise AssertionError(f"sampler {name} broke its symmetry class")
                reference = oracle.naive_decompose(a)
                fast = transform.decompose(a.copy())
                if corrupt:
                    fast[0, 0] += 1.0
                max_dev = max(max_dev, float(np.max(np.abs(fast - reference))))
                report = structure.check_structure(fast, sym, VERIFY_TOL)
                if sym is structure.SymmetryClass.HERMITIAN:
                    max_struct = max(max_struct, report.max_imag_coeff)
                elif sym is structure.SymmetryClass.REAL_SYMMETRIC:
                    max_struct = max(
                        max_struct, report.max_imag_coeff, report.max_forbidden_coeff
                    )
                elif sym is structure.SymmetryClass.COMPLEX_SYMMETRIC:
                    max_struct = max(max_struct, report.max_forbidden_coeff)
        if log is not None:
            print(f"verify n={n}: max|fast-oracle|={max_dev:.3e}", file=log)
    return max_dev, max_struct


def cmd_verify(args) -> int:
    if args.n_max > VERIFY_MAX_QUBITS:
        print(
            f"pauliwht verify: --n-max {args.n_max} exceeds the cap of "
            f"{VERIFY_MAX_QUBITS}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    max_dev, max_struct = run_verify(
        args.n_max, args.seed, args.trials, corrupt=args.corrupt, log=sys.stderr
    )
    ok = max_dev <= VERIFY_TOL and max_struct <= VERIFY_TOL
    print(
        f"verify: max deviation {max_dev:.3e}, max structure violation "
        f"{max_struct:.3e} -> {'ok' if ok else 'FAILED'}",
        file=sys.stderr,
    )
    return EXIT_OK if ok else EXIT_VERIFY


def run_bench(n_min, n_max, repeats=10, matrices=10, seed=0, log=None):
    """Time decompose on random Hermitian inputs.

    Returns (rows, means): rows of (n, run, matrix_index, seconds, swaps,
    adds_plus_subs) and the mean seconds per n.  Generation and copying
    are excluded from the timings.
    """
    warm_up()
    rows = []
    means = {}
    for n in range(n_min, n_max + 1):
        total = 0.0
        work = np.empty((1 << n, 1 << n), dtype=np.complex128)
        for matrix_index in range(matrices):
            base = random_hermitian(n, derive_seed(seed, n, matrix_index))
            for run in range(repeats):
                np.copyto(work, base)
                counters = transform.OpCounters()
                start = time.perf_counter()
                transform.decompose(work, counters)
                elapsed = time.perf_counter() - start
                total += elapsed
                rows.append(
                    (
                        n,
                        run,
                        matrix_index,
                        elapsed,
                        counters.swaps,
                        counters.complex_adds + counters.complex_subs,
                    )
                )
        means[n] = total / (matrices * repeats)
        if log is not None:
            line = f"bench n={n}: mean={means[n]:.6f}s"
            if n - 1 in means and means[n - 1] > 0:
                line += f" ratio={means[n] / means[n - 1]:.2f}"
            print(line, file=log)
    return rows, means


def cmd_bench(args) -> int:
    if args.n_min > args.n_max:
        print("pauliwht bench: --n-min exceeds --n-max", file=sys.stderr)
        return EXIT_USAGE
    if args.n_max > BENCH_MAX_QUBITS:
        print(
            f"pauliwht bench: --n-max {args.n_max} exceeds the cap of "
            f"{BENCH_MAX_QUBITS}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    rows, _ = run_bench(
        args.n_min, args.n_max, args.repeats, args.matrices, args.seed, log=sys.stderr
    )
    with open(args.output, "w") as f:
        f.write("n,run,matrix_index,seconds,swaps,adds_plus_subs\n")
        for n, run, matrix_index, seconds, swaps, ops in rows:
            f.write(f"{n},{run},{matrix_index},{seconds!r},{swaps},{ops}\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --version
        return int(exc.code or 0)
    if getattr(args, "threads", None):
        transform.set_workers(args.threads)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"pauliwht: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    raise SystemExit(main())
