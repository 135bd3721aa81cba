"""User reputation ranking on bipartite rating networks."""

from ._reprank import (
    MethodConfig,
    RatingDataset,
    RatingScale,
    ReprankError,
    ReputationVector,
    SpamExperiment,
    auc,
    estimate_quality,
    inject,
    load_triples,
    pearson,
    rank,
    rating_error,
    recall_at_L,
    sample_subset,
    simpson_diversity,
    trend_following,
    write_dataset,
)

__all__ = [
    "MethodConfig",
    "RatingDataset",
    "RatingScale",
    "ReprankError",
    "ReputationVector",
    "SpamExperiment",
    "auc",
    "estimate_quality",
    "inject",
    "load_triples",
    "pearson",
    "rank",
    "rating_error",
    "recall_at_L",
    "sample_subset",
    "simpson_diversity",
    "trend_following",
    "write_dataset",
]
