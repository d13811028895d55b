#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rwa/metrics.hpp"
#include "rwa/normalizer.hpp"
#include "rwa/snapshot.hpp"

namespace rwa {

/// A named convex weight triple over (L, C, M).
struct WeightScheme {
    std::string name;
    double w_l = 0.0;
    double w_c = 0.0;
    double w_m = 0.0;
};

/// Throws InvalidWeights unless every weight is >= 0 and the triple sums to 1
/// within 1e-9.
void validate_scheme(const WeightScheme& scheme);

/// The four built-in schemes: equal (1/3 each), liquidity-heavy
/// (0.50, 0.25, 0.25), concentration-heavy (0.25, 0.50, 0.25) and
/// market-quality-heavy (0.25, 0.25, 0.50).
std::vector<WeightScheme> canonical_weight_schemes();

/// L, C, M and per-scheme composites for one asset, all on the 0-100 scale.
struct RiskScores {
    std::string ticker;
    double liquidity = 0.0;
    double concentration = 0.0;
    double market_quality = 0.0;
    std::map<std::string, double> composites;  // scheme name -> score
};

/// Ranked scoring output. `rows` holds scored assets sorted descending by the
/// designated scheme's composite (ties broken by ticker ascending); benchmark
/// assets are reported separately and never appear in `rows`.
struct ScoreTable {
    std::vector<RiskScores> rows;
    std::vector<RiskScores> benchmark_rows;
    std::vector<std::string> scheme_names;  // configured scheme order
    std::string sort_scheme;
    std::string as_of;
    std::vector<std::string> warnings;
};

struct ScoringConfig {
    std::vector<WeightScheme> schemes = canonical_weight_schemes();
    std::string sort_scheme = "equal";
    bool include_benchmarks_in_bounds = true;
    NhhiSource nhhi_source = NhhiSource::holders;
};

/// Liquidity risk: mean of the risk-normalized turnover, active ratio and
/// transfer intensity (protective) and average transfer size
/// (risk-increasing).
double liquidity_score(const DerivedMetrics& m, const NormalizationContext& ctx);

/// Concentration risk: mean of risk-normalized holder count (protective),
/// average value per holder and network concentration (risk-increasing).
double concentration_score(std::int64_t holders, const DerivedMetrics& m,
                           const NormalizationContext& ctx);

/// Market-quality risk: mean of the risk-normalized active-address and
/// transfer-volume chain concentrations (both risk-increasing).
double market_quality_score(const DerivedMetrics& m, const NormalizationContext& ctx);

/// Convex combination w_l*L + w_c*C + w_m*M under a validated scheme.
double composite(double liquidity, double concentration, double market_quality,
                 const WeightScheme& scheme);

/// Scores every asset of the set against one normalization context built per
/// `config`, ranks the scored assets and reports benchmarks separately.
ScoreTable score_set(const SnapshotSet& set, const ScoringConfig& config = {});

/// (ticker x scheme) composite matrix recomputed from stored L/C/M.
struct SensitivityMatrix {
    std::vector<std::string> tickers;       // table row order
    std::vector<std::string> scheme_names;  // input scheme order
    std::vector<std::vector<double>> scores;  // [ticker][scheme]
};

/// Recomputes composites per scheme from the table's stored L/C/M without
/// re-normalizing. Row order matches the table's ranked order.
SensitivityMatrix sensitivity_sweep(const ScoreTable& table,
                                    std::span<const WeightScheme> schemes);

}  // namespace rwa
