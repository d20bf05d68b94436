/**
 * Term CSV helpers: the "label,r,s,re,im" schema the core reads and
 * writes.  Labels put qubit n-1 leftmost; qubit j maps to bit weight
 * 2**j in both r (X part) and s (Z part).
 */

export const TERMS_HEADER = "label,r,s,re,im";

const LETTERS = ["I", "X", "Z", "Y"]; // index = x_bit + 2 * z_bit

export function labelOf(r: number, s: number, n: number): string {
  let label = "";
  for (let j = n - 1; j >= 0; j--) {
    label += LETTERS[((r >> j) & 1) + 2 * ((s >> j) & 1)];
  }
  return label;
}

function formatFloat(x: number): string {
  if (Object.is(x, -0)) return "-0";
  return String(x);
}

/**
 * Render a dense interleaved coefficient buffer as a full term CSV (all
 * 4**n rows, zeros included, so the qubit count survives the trip).
 */
export function denseToTermsCsv(buffer: Float64Array, n: number): string {
  const size = 1 << n;
  const lines = [TERMS_HEADER];
  for (let r = 0; r < size; r++) {
    for (let s = 0; s < size; s++) {
      const flat = 2 * (r * size + s);
      lines.push(
        `${labelOf(r, s, n)},${r},${s},` +
          `${formatFloat(buffer[flat])},${formatFloat(buffer[flat + 1])}`,
      );
    }
  }
  return lines.join("\n") + "\n";
}

export interface TermArrays {
  labels: string[];
  /** interleaved (re, im) pairs, parallel to labels */
  coefficients: Float64Array;
}

export function parseTermsCsv(text: string): TermArrays {
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines[0] !== TERMS_HEADER) {
    throw new Error(`bad term-file header ${JSON.stringify(lines[0] ?? "")}`);
  }
  const labels: string[] = [];
  const coefficients = new Float64Array(2 * (lines.length - 1));
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== 5) {
      throw new Error(`line ${i + 1}: expected 5 fields, got ${fields.length}`);
    }
    const re = Number(fields[3]);
    const im = Number(fields[4]);
    if (!Number.isFinite(re) || !Number.isFinite(im)) {
      throw new Error(`line ${i + 1}: non-finite coefficient`);
    }
    labels.push(fields[0]);
    coefficients[2 * (i - 1)] = re;
    coefficients[2 * (i - 1) + 1] = im;
  }
  return { labels, coefficients };
}
