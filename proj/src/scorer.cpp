#include "rwa/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "rwa/errors.hpp"

namespace rwa {

void validate_scheme(const WeightScheme& scheme) {
    if (!(scheme.w_l >= 0.0) || !(scheme.w_c >= 0.0) || !(scheme.w_m >= 0.0)) {
        throw InvalidWeightsError("scheme '" + scheme.name + "': weights must be >= 0");
    }
    const double sum = scheme.w_l + scheme.w_c + scheme.w_m;
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "scheme '" << scheme.name << "': weights sum to " << sum << ", expected 1";
        throw InvalidWeightsError(msg.str());
    }
}

std::vector<WeightScheme> canonical_weight_schemes() {
    const double third = 1.0 / 3.0;
    return {
        {"equal", third, third, third},
        {"liquidity-heavy", 0.50, 0.25, 0.25},
        {"concentration-heavy", 0.25, 0.50, 0.25},
        {"market-quality-heavy", 0.25, 0.25, 0.50},
    };
}

double liquidity_score(const DerivedMetrics& m, const NormalizationContext& ctx) {
    return (risk_norm(m.turnover, "turnover", ctx) +
            risk_norm(m.active_ratio, "active_ratio", ctx) +
            risk_norm(m.transfer_intensity, "transfer_intensity", ctx) +
            risk_norm(m.avg_transfer_size, "ats", ctx)) /
           4.0;
}

double concentration_score(std::int64_t holders, const DerivedMetrics& m,
                           const NormalizationContext& ctx) {
    return (risk_norm(static_cast<double>(holders), "holders", ctx) +
            risk_norm(m.avg_value_per_holder, "avh", ctx) + risk_norm(m.nhhi, "nhhi", ctx)) /
           3.0;
}

double market_quality_score(const DerivedMetrics& m, const NormalizationContext& ctx) {
    return (risk_norm(m.hhi_active, "hhi_active", ctx) +
            risk_norm(m.hhi_volume, "hhi_volume", ctx)) /
           2.0;
}

double composite(double liquidity, double concentration, double market_quality,
                 const WeightScheme& scheme) {
    validate_scheme(scheme);
    return scheme.w_l * liquidity + scheme.w_c * concentration + scheme.w_m * market_quality;
}

namespace {

void validate_config(const ScoringConfig& config) {
    if (config.schemes.empty()) {
        throw InvalidWeightsError("no weight schemes configured");
    }
    std::set<std::string> names;
    for (const auto& scheme : config.schemes) {
        validate_scheme(scheme);
        if (!names.insert(scheme.name).second) {
            throw ValueError("duplicate weight scheme name '" + scheme.name + "'");
        }
    }
    if (!names.contains(config.sort_scheme)) {
        throw ValueError("sort scheme '" + config.sort_scheme +
                         "' is not among the configured schemes");
    }
}

}  // namespace

ScoreTable score_set(const SnapshotSet& set, const ScoringConfig& config) {
    validate_config(config);
    validate_set(set);

    const NormalizationContext ctx = build_context(
        set, standard_metrics(), config.include_benchmarks_in_bounds, config.nhhi_source);

    ScoreTable table;
    table.sort_scheme = config.sort_scheme;
    table.as_of = set.as_of;
    for (const auto& scheme : config.schemes) {
        table.scheme_names.push_back(scheme.name);
    }
    table.warnings = set.notes;
    table.warnings.insert(table.warnings.end(), ctx.warnings.begin(), ctx.warnings.end());

    for (const auto& asset : set.assets) {
        const DerivedMetrics m = derive_metrics(asset, config.nhhi_source);
        RiskScores scores;
        scores.ticker = asset.ticker;
        scores.liquidity = liquidity_score(m, ctx);
        scores.concentration = concentration_score(asset.holders, m, ctx);
        scores.market_quality = market_quality_score(m, ctx);
        for (const auto& scheme : config.schemes) {
            scores.composites.emplace(
                scheme.name, composite(scores.liquidity, scores.concentration,
                                       scores.market_quality, scheme));
        }
        if (asset.role == AssetRole::benchmark) {
            table.warnings.push_back(asset.ticker +
                                     ": benchmark asset; included in normalization bounds per "
                                     "configuration but excluded from the ranking");
            table.benchmark_rows.push_back(std::move(scores));
        } else {
            table.rows.push_back(std::move(scores));
        }
    }

    std::sort(table.rows.begin(), table.rows.end(),
              [&](const RiskScores& a, const RiskScores& b) {
                  const double ca = a.composites.at(config.sort_scheme);
                  const double cb = b.composites.at(config.sort_scheme);
                  if (ca != cb) {
                      return ca > cb;
                  }
                  return a.ticker < b.ticker;
              });
    return table;
}

SensitivityMatrix sensitivity_sweep(const ScoreTable& table,
                                    std::span<const WeightScheme> schemes) {
    SensitivityMatrix matrix;
    for (const auto& scheme : schemes) {
        validate_scheme(scheme);
        matrix.scheme_names.push_back(scheme.name);
    }
    for (const auto& row : table.rows) {
        matrix.tickers.push_back(row.ticker);
        std::vector<double> values;
        values.reserve(schemes.size());
        for (const auto& scheme : schemes) {
            values.push_back(
                composite(row.liquidity, row.concentration, row.market_quality, scheme));
        }
        matrix.scores.push_back(std::move(values));
    }
    return matrix;
}

}  // namespace rwa
