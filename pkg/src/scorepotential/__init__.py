"""Cut-off invariant evaluation of binary-response targeting models.

Exposes the benefit index (BenI), the exact rank-based score potential
(PoP), bucket-level gains charts combining the two, campaign cost
arithmetic, and a deterministic batch evaluation engine.
"""

from .economics import (
    CampaignEconomics,
    SpreadingLoss,
    cost_per_responder,
    cost_per_thousand,
    spreading_loss,
)
from .engine import (
    DECILE_CUTOFFS,
    BeniPoint,
    ComparisonReport,
    EvaluationContext,
    ModelEvaluation,
    compare_models,
    evaluate_model,
    generate_sample,
)
from .errors import (
    BadResponseValue,
    CutoffTooSmall,
    DegenerateClasses,
    DuplicateId,
    EmptyBatch,
    EmptySample,
    IndivisibleBuckets,
    MalformedRow,
    NoResponders,
    NonFiniteScore,
    TooFewPoints,
    ToolkitError,
    ZeroBaseRate,
)
from .figure import render_pop_vs_beni_figure
from .gains import (
    Bucket,
    GainsChart,
    attainment_ratio_column,
    build_gains_chart,
    p_up_avg_bucket,
    p_up_max_bucket,
    p_up_min_bucket,
    pop_approx,
    pop_denominator_chart,
)
from .metrics import (
    auc_crosscheck,
    beni,
    beni_at_cutoff,
    beni_max,
    perfect_rank_sum,
    pop_denominator_exact,
    pop_exact,
    pop_numerator_exact,
    selection_count,
)
from .report import (
    economics_summary,
    evaluation_from_csv,
    evaluation_from_dict,
    evaluation_to_csv,
    evaluation_to_dict,
    render_combined_chart,
    render_comparison,
    render_economics_text,
)
from .sample import CutOff, RankedSample, ScoredRecord, TiePolicy, rank_sample
from .sample_csv import parse_sample_csv, records_to_csv_text, write_sample_csv

__version__ = "0.1.0"

__all__ = [
    "BadResponseValue", "BeniPoint", "Bucket", "CampaignEconomics",
    "ComparisonReport", "CutOff", "CutoffTooSmall", "DECILE_CUTOFFS",
    "DegenerateClasses", "DuplicateId", "EmptyBatch", "EmptySample",
    "EvaluationContext", "GainsChart", "IndivisibleBuckets", "MalformedRow",
    "ModelEvaluation", "NoResponders", "NonFiniteScore", "RankedSample",
    "ScoredRecord", "SpreadingLoss", "TiePolicy", "TooFewPoints",
    "ToolkitError", "ZeroBaseRate", "attainment_ratio_column", "auc_crosscheck",
    "beni", "beni_at_cutoff", "beni_max", "build_gains_chart", "compare_models",
    "cost_per_responder", "cost_per_thousand", "economics_summary",
    "evaluate_model", "evaluation_from_csv", "evaluation_from_dict",
    "evaluation_to_csv", "evaluation_to_dict", "generate_sample",
    "p_up_avg_bucket", "p_up_max_bucket", "p_up_min_bucket",
    "parse_sample_csv", "perfect_rank_sum", "pop_approx",
    "pop_denominator_chart", "pop_denominator_exact", "pop_exact",
    "pop_numerator_exact", "rank_sample", "records_to_csv_text",
    "render_combined_chart", "render_comparison", "render_economics_text",
    "render_pop_vs_beni_figure", "selection_count", "spreading_loss",
    "write_sample_csv",
]
