"""Aesthetic measurement, ranking, and search for rectangular screen layouts."""

from .errors import (
    AmaError,
    DecodeError,
    DegenerateInputError,
    DomainError,
    EmptyInputError,
    EmptyLayoutError,
    LabelMismatchError,
    ParseError,
    ValidationError,
)
from .ingest import (
    RasterImage,
    export_results,
    ingest_object_model,
    layout_from_document,
    layout_to_document,
    load_netpbm,
    parse_layout,
    read_netpbm,
    serialize_layout,
)
from .metrics import (
    AxisWeights,
    MeasureVector,
    SequenceAssignment,
    axis_weights_for_rects,
    balance,
    equilibrium,
    evaluate,
    order_complexity,
    rhythm,
    sequence,
    sequence_assignment,
    symmetry,
)
from .model import (
    Frame,
    Layout,
    LayoutObject,
    Portion,
    Quadrant,
    QuadrantAggregates,
    QUADRANTS,
    layout_from_rects,
    quadrant_aggregates,
    split_at_axes,
)
from .optimize import (
    ObjectiveSpec,
    OptimizationResult,
    SearchParams,
    generate_groups,
    optimize,
    score,
)
from .stats import AnovaResult, RankVector, one_way_anova, rank_by_value, spearman_rho

__version__ = "0.1.0"

__all__ = [
    "AmaError",
    "AxisWeights",
    "AnovaResult",
    "DecodeError",
    "DegenerateInputError",
    "DomainError",
    "EmptyInputError",
    "EmptyLayoutError",
    "Frame",
    "LabelMismatchError",
    "Layout",
    "LayoutObject",
    "MeasureVector",
    "ObjectiveSpec",
    "OptimizationResult",
    "ParseError",
    "Portion",
    "QUADRANTS",
    "Quadrant",
    "QuadrantAggregates",
    "RankVector",
    "RasterImage",
    "SearchParams",
    "SequenceAssignment",
    "ValidationError",
    "axis_weights_for_rects",
    "balance",
    "equilibrium",
    "evaluate",
    "export_results",
    "generate_groups",
    "ingest_object_model",
    "layout_from_document",
    "layout_from_rects",
    "layout_to_document",
    "load_netpbm",
    "one_way_anova",
    "optimize",
    "order_complexity",
    "parse_layout",
    "rank_by_value",
    "read_netpbm",
    "rhythm",
    "score",
    "sequence",
    "sequence_assignment",
    "serialize_layout",
    "spearman_rho",
    "split_at_axes",
    "symmetry",
    "quadrant_aggregates",
]
