/**
 * PDMX binary matrix format.
 *
 * Layout: magic "PDMX", u16 version (= 1), u16 qubit count n, then
 * row-major (re, im) float64 pairs, everything little-endian.  The
 * in-memory twin is a Float64Array of length 2 * 4**n holding the same
 * interleaved pairs.
 */

const MAGIC = "PDMX";
const HEADER_BYTES = 8;

export const PDMX_VERSION = 1;
export const MAX_QUBITS = 16;

export function complexLength(n: number): number {
  return 2 * 4 ** n;
}

export function checkBuffer(buffer: Float64Array, n: number): void {
  if (!Number.isInteger(n) || n < 0 || n > MAX_QUBITS) {
    throw new RangeError(`qubit count ${n} outside supported range 0..${MAX_QUBITS}`);
  }
  if (buffer.length !== complexLength(n)) {
    throw new RangeError(
      `buffer length ${buffer.length} does not match 2 * 4**${n} = ${complexLength(n)}`,
    );
  }
}

export function encodeMatrix(buffer: Float64Array, n: number): Uint8Array {
  checkBuffer(buffer, n);
  const out = new Uint8Array(HEADER_BYTES + 8 * buffer.length);
  const view = new DataView(out.buffer);
  for (let i = 0; i < 4; i++) {
    view.setUint8(i, MAGIC.charCodeAt(i));
  }
  view.setUint16(4, PDMX_VERSION, true);
  view.setUint16(6, n, true);
  for (let i = 0; i < buffer.length; i++) {
    view.setFloat64(HEADER_BYTES + 8 * i, buffer[i], true);
  }
  return out;
}

/** Decode a PDMX payload into an existing buffer of the matching size. */
export function decodeMatrixInto(bytes: Uint8Array, n: number, target: Float64Array): void {
  checkBuffer(target, n);
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  if (bytes.length < HEADER_BYTES) {
    throw new Error("truncated header: not a PDMX matrix file");
  }
  let magic = "";
  for (let i = 0; i < 4; i++) {
    magic += String.fromCharCode(view.getUint8(i));
  }
  if (magic !== MAGIC) {
    throw new Error(`bad magic ${JSON.stringify(magic)}: not a PDMX matrix file`);
  }
  const version = view.getUint16(4, true);
  if (version !== PDMX_VERSION) {
    throw new Error(`unsupported PDMX version ${version}`);
  }
  const fileQubits = view.getUint16(6, true);
  if (fileQubits !== n) {
    throw new Error(`matrix file has n=${fileQubits}, expected n=${n}`);
  }
  const expected = HEADER_BYTES + 8 * complexLength(n);
  if (bytes.length !== expected) {
    throw new Error(`payload is ${bytes.length} bytes, expected ${expected}`);
  }
  for (let i = 0; i < target.length; i++) {
    target[i] = view.getFloat64(HEADER_BYTES + 8 * i, true);
  }
}
