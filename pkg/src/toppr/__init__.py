"""toppr: support-estimate precision and recall for generative models.

Scores a generated sample against a reference sample by estimating each
distribution's support as the superlevel set of an unnormalized kernel mean,
thresholded at a bootstrap confidence band, and counting cross-membership.
Includes neighborhood-ball baselines, synthetic stress scenarios, and a CLI.
"""

from . import errors
from .backends import backend_name, set_backend
from .band import ConfidenceBand, bootstrap_band, upper_quantile
from .baselines import DcResult, PrResult, density_coverage, improved_pr
from .kde import KdeModel, balloon_bandwidth, kernel_mean
from .neighbors import knn_dist, knn_sq_dist, pairwise_sq_dists
from .projection import ProjectionMap, make_projection, project
from .scoring import (
    PipelineConfig,
    ScoreReport,
    SupportEstimate,
    estimate_support,
    f1_score,
    top_pr,
)
from .synth import (
    ScenarioSpec,
    apply_scatter_noise,
    apply_swap_noise,
    apportion,
    dropped_mode_count,
    gen_long_tail,
    gen_mode_drop_pair,
    gen_shift_pair,
    ground_truth_diversity,
    scatter_bounds,
    scenario_pair,
)
from .tensor_io import (
    FeatureMatrix,
    NpyHeader,
    read_csv,
    read_npy,
    write_npy,
    write_report,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "set_backend",
    "backend_name",
    "FeatureMatrix",
    "NpyHeader",
    "read_npy",
    "read_csv",
    "write_npy",
    "write_report",
    "ProjectionMap",
    "make_projection",
    "project",
    "pairwise_sq_dists",
    "knn_dist",
    "knn_sq_dist",
    "KdeModel",
    "balloon_bandwidth",
    "kernel_mean",
    "ConfidenceBand",
    "bootstrap_band",
    "upper_quantile",
    "PipelineConfig",
    "SupportEstimate",
    "ScoreReport",
    "estimate_support",
    "top_pr",
    "f1_score",
    "PrResult",
    "DcResult",
    "improved_pr",
    "density_coverage",
    "ScenarioSpec",
    "gen_shift_pair",
    "gen_mode_drop_pair",
    "gen_long_tail",
    "ground_truth_diversity",
    "dropped_mode_count",
    "scenario_pair",
    "apply_scatter_noise",
    "apply_swap_noise",
    "scatter_bounds",
    "apportion",
    "__version__",
]
