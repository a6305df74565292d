/** Errors raised when a toppr CLI run fails, keyed off its exit code. */

export class TopprCliError extends Error {
  readonly exitCode: number;
  readonly stderr: string;

  constructor(message: string, exitCode: number, stderr: string) {
    super(message);
    this.name = "TopprCliError";
    this.exitCode = exitCode;
    this.stderr = stderr;
  }
}

/** Exit 2: bad flags or flag values (mirrors the CLI usage errors). */
export class UsageError extends TopprCliError {
  constructor(message: string, stderr: string) {
    super(message, 2, stderr);
    this.name = "UsageError";
  }
}

/** Exit 3: unreadable, malformed, or incompatible input data. */
export class DataError extends TopprCliError {
  constructor(message: string, stderr: string, exitCode = 3) {
    super(message, exitCode, stderr);
    this.name = "DataError";
  }
}

/** Exit 3 where the two samples disagree on column count. */
export class DimMismatchError extends DataError {
  constructor(message: string, stderr: string) {
    super(message, stderr);
    this.name = "DimMismatchError";
  }
}

/** Exit 4: data too degenerate to score (e.g. mostly duplicated rows). */
export class DegenerateDataError extends TopprCliError {
  constructor(message: string, stderr: string) {
    super(message, 4, stderr);
    this.name = "DegenerateDataError";
  }
}

/** Map a finished CLI run to the matching error instance. */
export function errorFromExit(code: number, stderr: string): TopprCliError {
  const line =
    stderr
      .split("\n")
      .map((s) => s.trim())
      .filter((s) => s.startsWith("toppr:"))
      .pop() ?? stderr.trim();
  if (code === 2) {
    return new UsageError(line || "invalid arguments", stderr);
  }
  if (code === 4) {
    return new DegenerateDataError(line, stderr);
  }
  if (code === 3 && /column/.test(line)) {
    return new DimMismatchError(line, stderr);
  }
  return new DataError(line || `toppr exited with code ${code}`, stderr, code);
}
