import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    include: ['tests/**/*.test.ts'],
    // the service round-trip test spawns a real backend process
    testTimeout: 60_000,
    hookTimeout: 120_000,
  },
});
