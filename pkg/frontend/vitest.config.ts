import { defineConfig } from "vitest/config";

// every binding call crosses a process boundary, so tests are slow
export default defineConfig({
  test: {
    testTimeout: 600_000,
    hookTimeout: 600_000,
  },
});
