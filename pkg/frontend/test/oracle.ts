/**
 * Host-side brute-force oracle: dense Pauli strings via Kronecker
 * products and the trace formula, sharing nothing with the bindings.
 */

type Complex = [number, number];
type Matrix = Complex[][]; // [row][col]

const c = (re: number, im = 0): Complex => [re, im];

const SINGLE: Record<string, Matrix> = {
  I: [
    [c(1), c(0)],
    [c(0), c(1)],
  ],
  X: [
    [c(0), c(1)],
    [c(1), c(0)],
  ],
  Z: [
    [c(1), c(0)],
    [c(0), c(-1)],
  ],
  Y: [
    [c(0), c(0, -1)],
    [c(0, 1), c(0)],
  ],
};

function mulC(a: Complex, b: Complex): Complex {
  return [a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]];
}

function kron(a: Matrix, b: Matrix): Matrix {
  const rows = a.length * b.length;
  const cols = a[0].length * b[0].length;
  const out: Matrix = [];
  for (let i = 0; i < rows; i++) {
    const row: Complex[] = [];
    for (let j = 0; j < cols; j++) {
      const ai = Math.floor(i / b.length);
      const bi = i % b.length;
      const aj = Math.floor(j / b[0].length);
      const bj = j % b[0].length;
      row.push(mulC(a[ai][aj], b[bi][bj]));
    }
    out.push(row);
  }
  return out;
}

export function pauliString(r: number, s: number, n: number): Matrix {
  let out: Matrix = [[c(1)]];
  for (let j = n - 1; j >= 0; j--) {
    const letter = ["I", "X", "Z", "Y"][((r >> j) & 1) + 2 * ((s >> j) & 1)];
    out = kron(out, SINGLE[letter]);
  }
  return out;
}

/** tr(P(r, s) @ A) / 2**n for an interleaved row-major buffer. */
export function traceCoefficient(
  buffer: Float64Array,
  n: number,
  r: number,
  s: number,
): Complex {
  const size = 1 << n;
  const p = pauliString(r, s, n);
  let re = 0;
  let im = 0;
  for (let i = 0; i < size; i++) {
    for (let j = 0; j < size; j++) {
      const flat = 2 * (j * size + i); // A[j][i]
      const term = mulC(p[i][j], [buffer[flat], buffer[flat + 1]]);
      re += term[0];
      im += term[1];
    }
  }
  return [re / size, im / size];
}

/** All 4**n coefficients, interleaved, in row-major (r, s) order. */
export function naiveDecompose(buffer: Float64Array, n: number): Float64Array {
  const size = 1 << n;
  const out = new Float64Array(2 * size * size);
  for (let r = 0; r < size; r++) {
    for (let s = 0; s < size; s++) {
      const [re, im] = traceCoefficient(buffer, n, r, s);
      out[2 * (r * size + s)] = re;
      out[2 * (r * size + s) + 1] = im;
    }
  }
  return out;
}
