/**
 * Client for the toppr CLI.
 *
 * Matrices are handed over as temporary .npy files and results come back as
 * the CLI's JSON report, parsed but otherwise untouched, so a client call and
 * a hand-rolled `toppr score` run on the same inputs agree field for field.
 */
import { execFile } from "node:child_process";
import { mkdtemp, rm, writeFile, readFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { Matrix, checkMatrix } from "./matrix.js";
import { encodeNpy } from "./npy.js";
import { BoundConfig, RunnerOptions, scoreArgs } from "./config.js";
import { errorFromExit } from "./errors.js";

export interface ScoreDiagnostics {
  precision_numer: number;
  precision_denom: number;
  recall_numer: number;
  recall_denom: number;
}

export interface RunFlags {
  format: string;
  csv_header: boolean;
  threads: number | null;
  backend: string;
  [key: string]: unknown;
}

/** JSON report of `toppr score`, keys verbatim. */
export interface ScoreReport {
  schema: string;
  top_p: number;
  top_r: number;
  f1: number;
  h_real: number;
  h_fake: number;
  c_real: number;
  c_fake: number;
  n_real: number;
  n_fake: number;
  proj_dim: number | null;
  alpha: number;
  bootstrap: number;
  seed: number;
  diagnostics: ScoreDiagnostics;
  flags: RunFlags;
}

/** JSON report of `toppr baseline`, keys verbatim. */
export interface BaselineReport {
  schema: string;
  metric: "pr" | "dc";
  precision?: number;
  recall?: number;
  density?: number;
  coverage?: number;
  dc_variant?: string;
  k: number;
  n_real: number;
  n_fake: number;
  flags: RunFlags;
}

export interface BaselineOptions extends RunnerOptions {
  metric: "pr" | "dc";
  /** Neighbor count for ball radii. CLI default: 5. */
  k?: number;
  /** Density normalization, dc only. CLI default: "original". */
  variant?: "original" | "paper-literal";
}

interface ExecOutcome {
  code: number;
  stdout: string;
  stderr: string;
}

function runCli(
  pythonBin: string,
  args: string[],
  env: Record<string, string> | undefined
): Promise<ExecOutcome> {
  return new Promise((resolve, reject) => {
    execFile(
      pythonBin,
      ["-m", "toppr.cli", ...args],
      {
        env: { ...process.env, ...env },
        maxBuffer: 64 * 1024 * 1024,
      },
      (err, stdout, stderr) => {
        if (err && typeof (err as NodeJS.ErrnoException).code === "string") {
          // spawn failure (interpreter missing), not a CLI exit
          reject(err);
          return;
        }
        const code = err ? ((err as { code?: number }).code ?? 1) : 0;
        resolve({ code, stdout, stderr });
      }
    );
  });
}

async function withTempInputs<T>(
  real: Matrix,
  fake: Matrix,
  body: (realPath: string, fakePath: string, outPath: string) => Promise<T>
): Promise<T> {
  checkMatrix(real, "real");
  checkMatrix(fake, "fake");
  const dir = await mkdtemp(join(tmpdir(), "toppr-"));
  try {
    const realPath = join(dir, "real.npy");
    const fakePath = join(dir, "fake.npy");
    await writeFile(realPath, encodeNpy(real, "real"));
    await writeFile(fakePath, encodeNpy(fake, "fake"));
    return await body(realPath, fakePath, join(dir, "report.json"));
  } finally {
    await rm(dir, { recursive: true, force: true });
  }
}

/**
 * Score a generated sample against a reference sample.
 *
 * Runs `toppr score` on the matrices and returns its JSON report. Failures
 * surface as the typed errors from ./errors.js with the CLI message attached.
 */
export async function boundTopPr(
  real: Matrix,
  fake: Matrix,
  config: BoundConfig,
  runner: RunnerOptions = {}
): Promise<ScoreReport> {
  const flags = scoreArgs(config);
  return withTempInputs(real, fake, async (realPath, fakePath, outPath) => {
    const outcome = await runCli(
      runner.pythonBin ?? "python3",
      ["score", "--real", realPath, "--fake", fakePath, ...flags, "--out", outPath],
      runner.env
    );
    if (outcome.code !== 0) {
      throw errorFromExit(outcome.code, outcome.stderr);
    }
    return JSON.parse(await readFile(outPath, "utf8")) as ScoreReport;
  });
}

/**
 * Run one of the reference metrics (improved precision/recall or
 * density/coverage) and return its JSON report.
 */
export async function boundBaselines(
  real: Matrix,
  fake: Matrix,
  options: BaselineOptions
): Promise<BaselineReport> {
  const flags = ["--metric", options.metric];
  if (options.k !== undefined) {
    flags.push("--k", String(options.k));
  }
  if (options.variant !== undefined) {
    flags.push("--dc-variant", options.variant);
  }
  return withTempInputs(real, fake, async (realPath, fakePath, outPath) => {
    const outcome = await runCli(
      options.pythonBin ?? "python3",
      ["baseline", "--real", realPath, "--fake", fakePath, ...flags, "--out", outPath],
      options.env
    );
    if (outcome.code !== 0) {
      throw errorFromExit(outcome.code, outcome.stderr);
    }
    return JSON.parse(await readFile(outPath, "utf8")) as BaselineReport;
  });
}
