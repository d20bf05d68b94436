/** splitmix64 on BigInt, for deterministic test matrices. */

const MASK = (1n << 64n) - 1n;

export function* splitmix64(seed: bigint): Generator<bigint> {
  let state = seed & MASK;
  for (;;) {
    state = (state + 0x9e3779b97f4a7c15n) & MASK;
    let z = state;
    z = ((z ^ (z >> 30n)) * 0xbf58476d1ce4b9f9n) & MASK;
    z = ((z ^ (z >> 27n)) * 0x94d049bb133111ebn) & MASK;
    yield (z ^ (z >> 31n)) & MASK;
  }
}

/** Interleaved complex buffer for an n-qubit matrix, entries in [-1, 1). */
export function randomBuffer(n: number, seed: number): Float64Array {
  const out = new Float64Array(2 * 4 ** n);
  const stream = splitmix64(BigInt(seed));
  for (let i = 0; i < out.length; i++) {
    const bits = stream.next().value as bigint;
    out[i] = 2 * (Number(bits >> 11n) * 2 ** -53) - 1;
  }
  return out;
}
