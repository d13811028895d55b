"""Explainable risk scoring for tokenized real-world assets.

Thin Python facade over the C++ core: snapshot ingestion, derived liquidity /
concentration / market-quality metrics, directional min-max normalization,
composite scoring and report rendering.
"""

from ._core import (
    AllZeroWeightsError,
    AssetMetricsRow,
    AssetRole,
    AssetSnapshot,
    ChainDistribution,
    ChainShare,
    DerivedMetrics,
    Direction,
    DuplicateTickerError,
    EmptyDistributionError,
    EmptyReferenceSetError,
    Error,
    FileNotFoundError,
    InputFormat,
    InvalidWeightsError,
    MetricBounds,
    NhhiSource,
    NormalizationContext,
    RiskScores,
    SchemaError,
    ScoreTable,
    ScoringConfig,
    SensitivityMatrix,
    SnapshotSet,
    UnknownMetricError,
    ValueError,
    WeightScheme,
    ZeroAssetValueError,
    assign_roles,
    build_context,
    canonical_weight_schemes,
    composite,
    compute_active_ratio,
    compute_avg_transfer_size,
    compute_avg_value_per_holder,
    compute_hhi,
    compute_transfer_intensity,
    compute_turnover,
    concentration_score,
    derive_metrics,
    emit_chains_csv,
    emit_report,
    emit_snapshot_csv,
    emit_snapshot_json,
    liquidity_score,
    load_snapshot_file,
    market_quality_score,
    normalize_chain_shares,
    parse_snapshot_csv,
    parse_snapshot_json,
    risk_norm,
    score_set,
    sensitivity_sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
