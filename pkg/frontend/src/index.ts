export { Matrix, matrixFromRows, checkMatrix } from "./matrix.js";
export { encodeNpy } from "./npy.js";
export { BoundConfig, RunnerOptions, DEFAULTS, scoreArgs } from "./config.js";
export {
  TopprCliError,
  UsageError,
  DataError,
  DimMismatchError,
  DegenerateDataError,
  errorFromExit,
} from "./errors.js";
export {
  boundTopPr,
  boundBaselines,
  ScoreReport,
  BaselineReport,
  BaselineOptions,
  ScoreDiagnostics,
  RunFlags,
} from "./client.js";
