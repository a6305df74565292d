import { execFile } from "node:child_process";
import { Matrix } from "../src/matrix.js";

export const PY_ENV = { TOPPR_BACKEND: "numpy" };

/** Deterministic 32-bit PRNG so test inputs are stable across runs. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function randMatrix(rand: () => number, rows: number, cols: number, spread = 1): Matrix {
  const data = new Float64Array(rows * cols);
  for (let i = 0; i < data.length; i++) {
    // Box-Muller, one draw per element
    const u = Math.max(rand(), 1e-12);
    const v = rand();
    data[i] = spread * Math.sqrt(-2 * Math.log(u)) * Math.cos(2 * Math.PI * v);
  }
  return { rows, cols, data };
}

export interface PyResult {
  code: number;
  stdout: string;
  stderr: string;
}

/** Run the Python interpreter and capture everything, never throwing on exit codes. */
export function runPython(args: string[], env: Record<string, string> = PY_ENV): Promise<PyResult> {
  return new Promise((resolve, reject) => {
    execFile(
      "python3",
      args,
      { env: { ...process.env, ...env }, maxBuffer: 64 * 1024 * 1024 },
      (err, stdout, stderr) => {
        if (err && typeof (err as NodeJS.ErrnoException).code === "string") {
          reject(err);
          return;
        }
        const code = err ? ((err as { code?: number }).code ?? 1) : 0;
        resolve({ code, stdout, stderr });
      }
    );
  });
}
