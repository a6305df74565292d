"""Command line interface.

Subcommands: score (support-estimate precision/recall of one real/fake
pair), baseline (neighborhood-ball metrics), synth (scenario sweeps written
as CSV curves), rank (rank score reports per metric and summarize ranking
disagreement as mean Hamming distance).

Exit codes: 0 success, 2 usage (bad flags/arguments), 3 data errors
(unreadable/malformed/mismatched inputs), 4 degenerate data (no meaningful
density scale). Reports go to stdout unless --out is given; stdout carries
nothing but the report.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

import numpy as np

from . import backends
from .baselines import density_coverage, improved_pr
from .errors import BadSpec, DegenerateData, IoError, TopprError
from .scoring import PipelineConfig, ScoreReport, top_pr
from .synth import (
    ScenarioSpec,
    dropped_mode_count,
    gen_long_tail,
    gen_mode_drop_pair,
    gen_shift_pair,
    ground_truth_diversity,
    scenario_pair,
)
from .tensor_io import read_csv, read_npy, write_report

SCENARIOS = ("shift", "mode-drop-seq", "mode-drop-sim", "scatter", "swap", "long-tail")


def _alpha_type(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < v < 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in (0, 1), got {v}")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _balloon_k_type(text: str):
    if text == "auto":
        return None
    return _positive_int(text)


def _unit_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {v}")
    return v


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--real", required=True, help="path to the reference feature matrix")
    p.add_argument("--fake", required=True, help="path to the generated feature matrix")
    p.add_argument("--format", choices=("auto", "npy", "csv"), default="auto",
                   help="input format; auto picks by file extension")
    p.add_argument("--csv-header", action="store_true",
                   help="treat the first CSV row as a header")


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--proj-dim", type=_nonneg_int, default=32,
                   help="random projection target dimension; 0 disables projection")
    p.add_argument("--alpha", type=_alpha_type, default=0.1,
                   help="band significance level in (0, 1)")
    p.add_argument("--bootstrap", type=_positive_int, default=10,
                   help="bootstrap repeat count")
    p.add_argument("--balloon-k", type=_balloon_k_type, default=None, metavar="K",
                   help="neighbor count for the bandwidth ('auto' = ceil(sqrt(n)))")
    p.add_argument("--seed", type=int, default=42, help="master seed for the run")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--threads", type=_positive_int, default=None,
                   help="cap compute threads (default: TOPPR_THREADS or all)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toppr",
        description="Support-estimate precision/recall for generative model samples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score one real/fake pair")
    _add_io_flags(p_score)
    _add_pipeline_flags(p_score)
    _add_common_flags(p_score)
    p_score.set_defaults(func=cmd_score)

    p_base = sub.add_parser("baseline", help="neighborhood-ball baseline metrics")
    _add_io_flags(p_base)
    p_base.add_argument("--metric", choices=("pr", "dc"), required=True,
                        help="pr = improved precision/recall, dc = density/coverage")
    p_base.add_argument("--k", type=_positive_int, default=5,
                        help="neighbor count for ball radii")
    p_base.add_argument("--dc-variant", choices=("original", "paper-literal"),
                        default="original",
                        help="density normalization: 1/(kM) or 1/M")
    _add_common_flags(p_base)
    p_base.set_defaults(func=cmd_baseline)

    p_synth = sub.add_parser("synth", help="run a synthetic scenario sweep")
    p_synth.add_argument("--scenario", choices=SCENARIOS, required=True)
    p_synth.add_argument("--n", type=_positive_int, default=1000, help="real rows")
    p_synth.add_argument("--m", type=_positive_int, default=1000, help="fake rows")
    p_synth.add_argument("--d", type=_positive_int, default=64, help="feature dimension")
    p_synth.add_argument("--steps", type=_positive_int, default=None,
                         help="sweep steps (defaults per scenario)")
    p_synth.add_argument("--outliers", type=_nonneg_int, default=1,
                         help="outlier rows appended to each side (shift only)")
    p_synth.add_argument("--outlier-coord", type=float, default=3.0,
                         help="coordinate value of planted outlier rows")
    p_synth.add_argument("--mu", type=float, default=0.0,
                         help="fake mean offset for scatter/swap base pair")
    p_synth.add_argument("--rho-max", type=_unit_float, default=0.15,
                         help="largest noise ratio (scatter/swap)")
    p_synth.add_argument("--num-modes", type=_positive_int, default=7)
    p_synth.add_argument("--mode-gap", type=float, default=3.0,
                         help="Euclidean distance between adjacent mode centers")
    p_synth.add_argument("--drop-max", type=_unit_float, default=0.8,
                         help="largest minority drop fraction (long-tail)")
    p_synth.add_argument("--major-classes", type=_nonneg_int, default=6)
    p_synth.add_argument("--major-count", type=_positive_int, default=2000)
    p_synth.add_argument("--minor-classes", type=_nonneg_int, default=4)
    p_synth.add_argument("--minor-count", type=_positive_int, default=500)
    p_synth.add_argument("--with-baselines", action="store_true",
                         help="append baseline metric columns to each row")
    p_synth.add_argument("--k", type=_positive_int, default=5,
                         help="baseline neighbor count")
    _add_pipeline_flags(p_synth)
    _add_common_flags(p_synth)
    p_synth.set_defaults(func=cmd_synth)

    p_rank = sub.add_parser("rank", help="rank models from score reports")
    p_rank.add_argument("reports", nargs="+", help="score report JSON files")
    p_rank.add_argument("--metrics", default="top_p,top_r,f1",
                        help="comma-separated report fields to rank on")
    p_rank.add_argument("--names", default=None,
                        help="comma-separated model names (default: file stems)")
    _add_common_flags(p_rank)
    p_rank.set_defaults(func=cmd_rank)

    return parser


def _configure_threads(args) -> int | None:
    threads = getattr(args, "threads", None)
    if threads is None:
        env = os.environ.get("TOPPR_THREADS")
        if env is not None:
            try:
                threads = int(env)
                if threads < 1:
                    raise ValueError
            except ValueError:
                print(f"toppr: ignoring invalid TOPPR_THREADS={env!r}", file=sys.stderr)
                threads = None
    if threads is not None and backends.backend_name() == "numba":
        import numba

        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    return threads


def _load_matrix(path: str, fmt: str, csv_header: bool):
    if fmt == "auto":
        if path.endswith(".npy"):
            fmt = "npy"
        elif path.endswith(".csv"):
            fmt = "csv"
        else:
            raise BadSpec(f"{path}: cannot infer format from extension; pass --format")
    if fmt == "npy":
        return read_npy(path)
    return read_csv(path, has_header=csv_header)


def _emit(args, doc: dict) -> None:
    text = write_report(getattr(args, "out", None), doc)
    if getattr(args, "out", None) is None:
        sys.stdout.write(text)


def _score_doc(rep: ScoreReport, flags: dict) -> dict:
    return {
        "schema": "toppr/1",
        "top_p": rep.top_p,
        "top_r": rep.top_r,
        "f1": rep.f1,
        "h_real": rep.h_real,
        "h_fake": rep.h_fake,
        "c_real": rep.c_real,
        "c_fake": rep.c_fake,
        "n_real": rep.n_real,
        "n_fake": rep.n_fake,
        "proj_dim": rep.proj_dim,
        "alpha": rep.alpha,
        "bootstrap": rep.repeats,
        "seed": rep.seed,
        "diagnostics": {
            "precision_numer": rep.precision_numer,
            "precision_denom": rep.precision_denom,
            "recall_numer": rep.recall_numer,
            "recall_denom": rep.recall_denom,
        },
        "flags": flags,
    }


def _pipeline_config(args) -> PipelineConfig:
    return PipelineConfig(
        proj_dim=None if args.proj_dim == 0 else args.proj_dim,
        alpha=args.alpha,
        repeats=args.bootstrap,
        balloon_k=args.balloon_k,
        seed=args.seed,
    )


def cmd_score(args) -> int:
    real = _load_matrix(args.real, args.format, args.csv_header)
    fake = _load_matrix(args.fake, args.format, args.csv_header)
    rep = top_pr(real.data, fake.data, _pipeline_config(args))
    flags = {
        "balloon_k": "auto" if args.balloon_k is None else args.balloon_k,
        "format": args.format,
        "csv_header": bool(args.csv_header),
        "threads": args.threads,
        "backend": backends.backend_name(),
    }
    _emit(args, _score_doc(rep, flags))
    return 0


def cmd_baseline(args) -> int:
    real = _load_matrix(args.real, args.format, args.csv_header)
    fake = _load_matrix(args.fake, args.format, args.csv_header)
    doc = {"schema": "toppr/1", "metric": args.metric}
    if args.metric == "pr":
        pr = improved_pr(real.data, fake.data, k=args.k)
        doc["precision"] = pr.precision
        doc["recall"] = pr.recall
    else:
        variant = args.dc_variant.replace("-", "_")
        dc = density_coverage(real.data, fake.data, k=args.k, variant=variant)
        doc["density"] = dc.density
        doc["coverage"] = dc.coverage
        doc["dc_variant"] = variant
    doc.update(
        k=args.k,
        n_real=real.rows,
        n_fake=fake.rows,
        flags={
            "format": args.format,
            "csv_header": bool(args.csv_header),
            "threads": args.threads,
            "backend": backends.backend_name(),
        },
    )
    _emit(args, doc)
    return 0


def _metric_columns(args) -> list[str]:
    cols = ["top_p", "top_r", "f1"]
    if args.with_baselines:
        cols += ["precision", "recall", "density", "coverage"]
    return cols


def _score_step(args, real: np.ndarray, fake: np.ndarray) -> list[float]:
    rep = top_pr(real, fake, _pipeline_config(args))
    vals = [rep.top_p, rep.top_r, rep.f1]
    if args.with_baselines:
        pr = improved_pr(real, fake, k=args.k)
        dc = density_coverage(real, fake, k=args.k)
        vals += [pr.precision, pr.recall, dc.density, dc.coverage]
    return vals


def _synth_rows(args) -> tuple[list[str], list[list]]:
    scen = args.scenario
    metric_cols = _metric_columns(args)

    if scen == "shift":
        steps = args.steps or 13
        header = ["mu"] + metric_cols
        rows = []
        for mu in np.linspace(-1.0, 1.0, steps):
            spec = ScenarioSpec(kind="shift", n=args.n, m=args.m, d=args.d,
                                seed=args.seed, mu=float(mu), outliers=args.outliers,
                                outlier_coord=args.outlier_coord)
            real, fake = gen_shift_pair(spec)
            rows.append([float(mu)] + _score_step(args, real, fake))
        return header, rows

    if scen == "mode-drop-seq":
        steps = args.steps or args.num_modes
        header = ["modes_dropped", "ground_truth_diversity"] + metric_cols
        rows = []
        for t in np.linspace(0.0, 1.0, min(steps, args.num_modes)):
            spec = ScenarioSpec(kind="sequential_drop", n=args.n, m=args.m, d=args.d,
                                seed=args.seed, num_modes=args.num_modes,
                                step=float(t), mode_gap=args.mode_gap)
            real, fake = gen_mode_drop_pair(spec)
            rows.append([dropped_mode_count(spec), ground_truth_diversity(spec)]
                        + _score_step(args, real, fake))
        return header, rows

    if scen == "mode-drop-sim":
        steps = args.steps or 11
        header = ["drop", "ground_truth_diversity"] + metric_cols
        rows = []
        for t in np.linspace(0.0, 1.0, steps):
            spec = ScenarioSpec(kind="simultaneous_drop", n=args.n, m=args.m, d=args.d,
                                seed=args.seed, num_modes=args.num_modes,
                                step=float(t), mode_gap=args.mode_gap)
            real, fake = gen_mode_drop_pair(spec)
            rows.append([float(t), ground_truth_diversity(spec)]
                        + _score_step(args, real, fake))
        return header, rows

    if scen in ("scatter", "swap"):
        steps = args.steps or 4
        kind = "scatter_noise" if scen == "scatter" else "swap_noise"
        header = ["rho"] + metric_cols
        rows = []
        for rho in np.linspace(0.0, args.rho_max, steps):
            spec = ScenarioSpec(kind=kind, n=args.n, m=args.m, d=args.d,
                                seed=args.seed, mu=args.mu, rho=float(rho))
            real, fake = scenario_pair(spec)
            rows.append([float(rho)] + _score_step(args, real, fake))
        return header, rows

    # long-tail: the real side keeps the full minority mass, the fake side
    # loses a growing fraction of it (mass is not reassigned)
    steps = args.steps or 5
    base = ScenarioSpec(kind="long_tail", d=args.d, seed=args.seed,
                        major_classes=args.major_classes,
                        major_count=args.major_count,
                        minor_classes=args.minor_classes,
                        minor_count=args.minor_count)
    real, _ = gen_long_tail(base, role="real")
    total = base.major_classes * base.major_count + base.minor_classes * base.minor_count
    minor_share = base.minor_classes * base.minor_count / total
    header = ["drop_fraction", "ground_truth_diversity"] + metric_cols
    rows = []
    for f in np.linspace(0.0, args.drop_max, steps):
        kept = int(round(base.minor_count * (1.0 - float(f))))
        spec = dataclasses.replace(base, minor_count=max(kept, 1))
        fake, _ = gen_long_tail(spec, role="fake")
        rows.append([float(f), 1.0 - minor_share * float(f)]
                    + _score_step(args, real, fake))
    return header, rows


def cmd_synth(args) -> int:
    header, rows = _synth_rows(args)
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(repr(v) if isinstance(v, float) else str(v) for v in row))
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as exc:
            raise IoError(f"{args.out}: {exc}") from exc
    return 0


def hamming_distance(list_a: list, list_b: list) -> int:
    """Number of positions at which two equal-length rank lists differ."""
    if len(list_a) != len(list_b):
        raise BadSpec("rank lists must have equal length")
    return sum(1 for a, b in zip(list_a, list_b) if a != b)


def rank_by_metric(values: list[float]) -> list[int]:
    """Model indices ordered best (largest) to worst; ties keep input order."""
    return sorted(range(len(values)), key=lambda i: (-values[i], i))


def cmd_rank(args) -> int:
    if len(args.reports) < 2:
        raise BadSpec(f"rank needs >= 2 report files, got {len(args.reports)}")
    metrics = [m for m in args.metrics.split(",") if m]
    if len(metrics) < 2:
        raise BadSpec(f"rank needs >= 2 metrics, got {metrics}")

    if args.names is not None:
        names = args.names.split(",")
        if len(names) != len(args.reports):
            raise BadSpec(
                f"--names lists {len(names)} names for {len(args.reports)} reports"
            )
    else:
        names = [os.path.splitext(os.path.basename(p))[0] for p in args.reports]

    docs = []
    for path in args.reports:
        try:
            with open(path, "r", encoding="utf-8") as f:
                doc = json.load(f)
        except OSError as exc:
            raise IoError(f"{path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise BadSpec(f"{path}: not valid JSON: {exc}") from exc
        if not isinstance(doc, dict) or doc.get("schema") != "toppr/1":
            raise BadSpec(f"{path}: not a toppr/1 report")
        docs.append(doc)

    rankings: dict[str, list[str]] = {}
    lists: list[list[int]] = []
    for metric in metrics:
        vals = []
        for path, doc in zip(args.reports, docs):
            v = doc.get(metric)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise BadSpec(f"{path}: report has no numeric field {metric!r}")
            vals.append(float(v))
        order = rank_by_metric(vals)
        lists.append(order)
        rankings[metric] = [names[i] for i in order]

    pair_hd: dict[str, int] = {}
    total = 0
    pairs = 0
    for i in range(len(metrics)):
        for j in range(i + 1, len(metrics)):
            hd = hamming_distance(lists[i], lists[j])
            pair_hd[f"{metrics[i]}|{metrics[j]}"] = hd
            total += hd
            pairs += 1

    doc = {
        "schema": "toppr/1",
        "models": names,
        "metrics": metrics,
        "rankings": rankings,
        "hamming": pair_hd,
        "mean_hamming_distance": total / pairs,
    }
    _emit(args, doc)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _configure_threads(args)
        return args.func(args)
    except DegenerateData as exc:
        print(f"toppr: degenerate data: {exc}", file=sys.stderr)
        return 4
    except TopprError as exc:
        print(f"toppr: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
