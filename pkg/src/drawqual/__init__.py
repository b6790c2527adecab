"""Aesthetic metrics and z-score quality ranking for 2D graph drawings.

The pipeline: build or load a drawing set (one graph, several layouts),
measure four raw aesthetics per drawing, z-standardize each metric within
the set, and combine the z-scores into one signed quality score per
drawing. Synthesis utilities generate seeded random graphs and spring
embedder drawings to feed the pipeline.
"""

from .aesthetics import (
    AestheticVector,
    aesthetic_vector,
    angular_resolution,
    crossing_count,
    crossing_resolution,
    edge_length_uniformity,
)
from .experiment import (
    ExperimentConfig,
    ExperimentReport,
    fast_config,
    run_validity_experiment,
    spearman_rank_correlation,
)
from .geometry import (
    COLLINEAR_OVERLAP,
    DEFAULT_EPS,
    ENDPOINT_TOUCH,
    NONE,
    PROPER_CROSSING,
    IntersectionResult,
    Segment,
    angular_gaps_deg,
    classify_intersection,
    crossing_angle_deg,
)
from .model import (
    DrawingSet,
    DrawingSetError,
    Graph,
    Layout,
    SchemaError,
    SemanticError,
    ValidationReport,
    parse_drawing_set,
    serialize_drawing_set,
    validate_drawing_set,
)
from .quality import (
    AGGREGATION_SIGNS,
    METRIC_NAMES,
    ComparisonReport,
    QualityScore,
    ZScoreVector,
    compare_drawing_set,
    overall_quality,
    rank_scores,
    standardize,
)
from .synthesis import (
    DEFAULT_PARAM_RANGES,
    LayoutParams,
    ParamRanges,
    Seed,
    erdos_renyi_gnm,
    force_directed_snapshots,
    random_layout,
    randomized_layout_suite,
)

__version__ = "0.1.0"
