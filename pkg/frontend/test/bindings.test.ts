import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import {
  boundDecompose,
  boundReconstruct,
  boundTerms,
  complexLength,
  coreVersion,
  labelOf,
} from "../src/index.js";
import { runCore } from "../src/core.js";
import { decodeMatrixInto, encodeMatrix } from "../src/pdmx.js";
import { naiveDecompose } from "./oracle.js";
import { randomBuffer } from "./rng.js";

function maxAbsDiff(a: Float64Array, b: Float64Array): number {
  let worst = 0;
  for (let i = 0; i < a.length; i++) {
    worst = Math.max(worst, Math.abs(a[i] - b[i]));
  }
  return worst;
}

describe("pdmx codec", () => {
  it("round-trips buffers including signed zeros", () => {
    const buffer = Float64Array.from([1.5, -0, 0, -2.25e-300, 3, 4e15, -1, 0.125]);
    const decoded = new Float64Array(8);
    decodeMatrixInto(encodeMatrix(buffer, 1), 1, decoded);
    for (let i = 0; i < buffer.length; i++) {
      expect(Object.is(decoded[i], buffer[i])).toBe(true);
    }
  });

  it("rejects wrong buffer lengths", () => {
    expect(() => encodeMatrix(new Float64Array(7), 1)).toThrow(RangeError);
    expect(() => encodeMatrix(new Float64Array(8), 2)).toThrow(RangeError);
  });
});

describe("labels", () => {
  it("matches the core's conventions", () => {
    expect(labelOf(0, 0, 3)).toBe("III");
    expect(labelOf(1, 1, 1)).toBe("Y");
    expect(labelOf(1, 2, 2)).toBe("ZX");
  });
});

describe("core process", () => {
  it("reports a version", () => {
    expect(coreVersion()).toMatch(/^pauliwht \d+\.\d+\.\d+$/);
  });
});

describe("boundDecompose", () => {
  it("decomposes the Pauli Y matrix to a single unit coefficient", () => {
    // Y = [[0, -i], [i, 0]] interleaved row-major
    const buffer = Float64Array.from([0, 0, 0, -1, 0, 1, 0, 0]);
    const result = boundDecompose(buffer, 1);
    expect(result).toBe(buffer); // aliasing contract
    expect(Array.from(result)).toEqual([0, 0, 0, 0, 0, 0, 1, 0]);
  });

  it("matches the host-side trace oracle on a random 4x4 matrix", () => {
    const buffer = randomBuffer(2, 12345);
    const expected = naiveDecompose(buffer, 2);
    boundDecompose(buffer, 2);
    expect(maxAbsDiff(buffer, expected)).toBeLessThan(1e-12);
  });

  it("rejects wrong-length buffers without touching them", () => {
    const buffer = Float64Array.from([1, 2, 3]);
    expect(() => boundDecompose(buffer, 1)).toThrow(RangeError);
    expect(Array.from(buffer)).toEqual([1, 2, 3]);
  });
});

describe("boundReconstruct", () => {
  it("maps the all-zero coefficient buffer to the zero matrix", () => {
    const buffer = new Float64Array(complexLength(2));
    boundReconstruct(buffer, 2);
    expect(buffer.every((x) => x === 0)).toBe(true);
  });

  it("rejects wrong-length buffers", () => {
    expect(() => boundReconstruct(new Float64Array(9), 1)).toThrow(RangeError);
  });
});

describe("boundTerms", () => {
  it("lists the identity as a single II... term", () => {
    const buffer = new Float64Array(complexLength(2));
    const size = 4;
    for (let i = 0; i < size; i++) {
      buffer[2 * (i * size + i)] = 1;
    }
    const { labels, coefficients } = boundTerms(buffer, 2);
    expect(labels).toEqual(["II"]);
    expect(Array.from(coefficients)).toEqual([1, 0]);
  });

  it("matches the worked diagonal example", () => {
    const buffer = new Float64Array(complexLength(2));
    for (let i = 0; i < 4; i++) {
      buffer[2 * (i * 4 + i)] = i + 1;
    }
    const { labels, coefficients } = boundTerms(buffer, 2);
    expect(labels).toEqual(["II", "IZ", "ZI"]);
    expect(Array.from(coefficients)).toEqual([2.5, 0, -0.5, 0, -1, 0]);
  });

  it("returns empty arrays when the threshold exceeds every coefficient", () => {
    const buffer = randomBuffer(1, 777);
    const { labels, coefficients } = boundTerms(buffer, 1, 1e9);
    expect(labels).toEqual([]);
    expect(coefficients.length).toBe(0);
  });

  it("rejects negative thresholds", () => {
    expect(() => boundTerms(new Float64Array(8), 1, -1)).toThrow(RangeError);
  });
});

describe("acceptance: bindings equivalence", () => {
  it("is bitwise identical to the CLI dense output and round-trips", () => {
    for (let index = 0; index < 10; index++) {
      const n = (index % 6) + 1;
      const original = randomBuffer(n, 9000 + index);

      // direct CLI run on the same input bytes
      const dir = mkdtempSync(join(tmpdir(), "pauliwht-accept-"));
      let viaCli: Float64Array;
      try {
        const input = join(dir, "in.pdmx");
        const output = join(dir, "out.pdmx");
        writeFileSync(input, encodeMatrix(original, n));
        runCore([
          "decompose", input,
          "--input-format", "binary",
          "--emit", "dense",
          "--threshold", "0",
          "-o", output,
        ]);
        viaCli = new Float64Array(complexLength(n));
        decodeMatrixInto(readFileSync(output), n, viaCli);
      } finally {
        rmSync(dir, { recursive: true, force: true });
      }

      const viaBindings = boundDecompose(Float64Array.from(original), n);
      for (let i = 0; i < viaCli.length; i++) {
        expect(Object.is(viaBindings[i], viaCli[i])).toBe(true);
      }

      const back = boundReconstruct(Float64Array.from(viaBindings), n);
      expect(maxAbsDiff(back, original)).toBeLessThan(1e-12);
    }
  });
});
