import { defineConfig } from "vitest/config";

// Most tests shell out to the Python CLI, so the per-test budget is generous.
export default defineConfig({
  test: {
    testTimeout: 180_000,
    hookTimeout: 60_000,
  },
});
