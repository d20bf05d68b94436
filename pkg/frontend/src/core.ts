/**
 * Process boundary to the decomposition core.
 *
 * The core is reached through its command-line interface and byte-exact
 * file formats only.  Set PAULIWHT_BIN to override the executable, e.g.
 * "python3 -m pauliwht".
 */

import { spawnSync } from "node:child_process";

export class CoreError extends Error {
  constructor(
    message: string,
    public readonly exitCode: number | null,
    public readonly stderr: string,
  ) {
    super(message);
    this.name = "CoreError";
  }
}

let resolved: string[] | null = null;

function probe(command: string[]): boolean {
  const result = spawnSync(command[0], [...command.slice(1), "--version"], {
    encoding: "utf8",
  });
  return result.status === 0;
}

function resolveCommand(): string[] {
  if (resolved) return resolved;
  const override = process.env.PAULIWHT_BIN;
  if (override) {
    resolved = override.split(/\s+/).filter((part) => part.length > 0);
    return resolved;
  }
  for (const candidate of [["pauliwht"], ["python3", "-m", "pauliwht"]]) {
    if (probe(candidate)) {
      resolved = candidate;
      return resolved;
    }
  }
  throw new CoreError(
    "pauliwht core not found; install it or set PAULIWHT_BIN",
    null,
    "",
  );
}

export function runCore(args: string[]): { stdout: string; stderr: string } {
  const command = resolveCommand();
  const result = spawnSync(command[0], [...command.slice(1), ...args], {
    encoding: "utf8",
    maxBuffer: 1 << 28,
  });
  if (result.error) {
    throw new CoreError(`failed to launch core: ${result.error.message}`, null, "");
  }
  if (result.status !== 0) {
    throw new CoreError(
      `core exited with status ${result.status}: ${result.stderr.trim()}`,
      result.status,
      result.stderr,
    );
  }
  return { stdout: result.stdout, stderr: result.stderr };
}

export function coreVersion(): string {
  return runCore(["--version"]).stdout.trim();
}
