/**
 * Flat-buffer bindings for the pauliwht decomposition core.
 *
 * Matrices travel as Float64Array buffers of length 2 * 4**n holding
 * row-major interleaved (re, im) pairs.  boundDecompose and
 * boundReconstruct overwrite the caller's buffer and return it, so the
 * returned view aliases the input; nothing proportional to the matrix
 * is retained here.
 */

import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { coreVersion, runCore } from "./core.js";
import { checkBuffer, decodeMatrixInto, encodeMatrix } from "./pdmx.js";
import { denseToTermsCsv, parseTermsCsv, type TermArrays } from "./terms.js";

export { CoreError, coreVersion } from "./core.js";
export { MAX_QUBITS, complexLength } from "./pdmx.js";
export { labelOf, type TermArrays } from "./terms.js";

function withWorkDir<T>(body: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "pauliwht-"));
  try {
    return body(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

/**
 * Overwrite `buffer` with the Pauli coefficients of the matrix it holds.
 * Entry (r, s) lands at flat complex index r * 2**n + s.
 */
export function boundDecompose(buffer: Float64Array, n: number): Float64Array {
  checkBuffer(buffer, n);
  withWorkDir((dir) => {
    const input = join(dir, "in.pdmx");
    const output = join(dir, "out.pdmx");
    writeFileSync(input, encodeMatrix(buffer, n));
    runCore([
      "decompose", input,
      "--input-format", "binary",
      "--emit", "dense",
      "--threshold", "0",
      "-o", output,
    ]);
    decodeMatrixInto(readFileSync(output), n, buffer);
  });
  return buffer;
}

/**
 * Overwrite a coefficient buffer with the matrix it encodes; the exact
 * inverse of boundDecompose.
 */
export function boundReconstruct(buffer: Float64Array, n: number): Float64Array {
  checkBuffer(buffer, n);
  withWorkDir((dir) => {
    const terms = join(dir, "coeffs.csv");
    const output = join(dir, "out.pdmx");
    writeFileSync(terms, denseToTermsCsv(buffer, n));
    runCore(["reconstruct", terms, "--format", "binary", "-o", output]);
    decodeMatrixInto(readFileSync(output), n, buffer);
  });
  return buffer;
}

/**
 * Decompose without touching `buffer`: returns the labels and
 * interleaved coefficients of every term with |coeff| > threshold, in
 * (r, s) order.
 */
export function boundTerms(
  buffer: Float64Array,
  n: number,
  threshold = 1e-12,
): TermArrays {
  checkBuffer(buffer, n);
  if (!(threshold >= 0)) {
    throw new RangeError(`threshold must be nonnegative, got ${threshold}`);
  }
  return withWorkDir((dir) => {
    const input = join(dir, "in.pdmx");
    const output = join(dir, "terms.csv");
    writeFileSync(input, encodeMatrix(buffer, n));
    runCore([
      "decompose", input,
      "--input-format", "binary",
      "--emit", "terms",
      "--threshold", String(threshold),
      "-o", output,
    ]);
    return parseTermsCsv(readFileSync(output, "utf8"));
  });
}
