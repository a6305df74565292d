/** Scoring options, mirroring the CLI score flags field for field. */
export interface BoundConfig {
  /** Master seed for the run. The CLI defaults this, the client does not. */
  seed: number;
  /** Random projection target dimension; null disables projection. */
  projDim?: number | null;
  /** Confidence band significance level in (0, 1). */
  alpha?: number;
  /** Bootstrap repeat count. */
  repeats?: number;
  /** Neighbor count for the bandwidth; "auto" = ceil(sqrt(n)). */
  balloonK?: number | "auto";
}

/** How to reach the Python side. */
export interface RunnerOptions {
  /** Interpreter with the toppr package installed. Default "python3". */
  pythonBin?: string;
  /** Extra environment entries for the subprocess (e.g. TOPPR_BACKEND). */
  env?: Record<string, string>;
}

export const DEFAULTS = {
  projDim: 32 as number | null,
  alpha: 0.1,
  repeats: 10,
  balloonK: "auto" as number | "auto",
};

export function scoreArgs(config: BoundConfig): string[] {
  if (!Number.isInteger(config.seed)) {
    throw new Error("BoundConfig.seed must be an integer");
  }
  const projDim = config.projDim === undefined ? DEFAULTS.projDim : config.projDim;
  const alpha = config.alpha ?? DEFAULTS.alpha;
  const repeats = config.repeats ?? DEFAULTS.repeats;
  const balloonK = config.balloonK ?? DEFAULTS.balloonK;
  return [
    "--proj-dim",
    String(projDim === null ? 0 : projDim),
    "--alpha",
    String(alpha),
    "--bootstrap",
    String(repeats),
    "--balloon-k",
    String(balloonK),
    "--seed",
    String(config.seed),
  ];
}
