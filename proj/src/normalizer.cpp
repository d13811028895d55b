#include "rwa/normalizer.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rwa/errors.hpp"

namespace rwa {

std::span<const MetricSpec> standard_metrics() {
    static const std::array<MetricSpec, 9> specs{{
        {"turnover", Direction::protective},
        {"active_ratio", Direction::protective},
        {"transfer_intensity", Direction::protective},
        {"ats", Direction::risk_increasing},
        {"holders", Direction::protective},
        {"avh", Direction::risk_increasing},
        {"nhhi", Direction::risk_increasing},
        {"hhi_active", Direction::risk_increasing},
        {"hhi_volume", Direction::risk_increasing},
    }};
    return specs;
}

std::optional<double> metric_value(const AssetSnapshot& asset, const DerivedMetrics& m,
                                   std::string_view name) {
    if (name == "turnover") return m.turnover;
    if (name == "active_ratio") return m.active_ratio;
    if (name == "transfer_intensity") return m.transfer_intensity;
    if (name == "ats") return m.avg_transfer_size;
    if (name == "holders") return static_cast<double>(asset.holders);
    if (name == "avh") return m.avg_value_per_holder;
    if (name == "nhhi") return m.nhhi;
    if (name == "hhi_active") return m.hhi_active;
    if (name == "hhi_volume") return m.hhi_volume;
    throw UnknownMetricError("unknown metric '" + std::string(name) + "'");
}

NormalizationContext build_context(const SnapshotSet& set, std::span<const MetricSpec> metrics,
                                   bool include_benchmarks, NhhiSource nhhi_source) {
    std::vector<const AssetSnapshot*> reference;
    for (const auto& asset : set.assets) {
        if (asset.role == AssetRole::scored || include_benchmarks) {
            reference.push_back(&asset);
        }
    }
    if (reference.empty()) {
        throw EmptyReferenceSetError("normalization reference set is empty");
    }

    NormalizationContext ctx;
    std::vector<DerivedMetrics> derived;
    derived.reserve(reference.size());
    for (const auto* asset : reference) {
        ctx.reference_tickers.push_back(asset->ticker);
        derived.push_back(derive_metrics(*asset, nhhi_source));
    }

    for (const auto& spec : metrics) {
        MetricBounds bounds;
        bounds.direction = spec.direction;
        for (std::size_t i = 0; i < reference.size(); ++i) {
            const auto value = metric_value(*reference[i], derived[i], spec.name);
            if (!value) {
                continue;  // undefined values carry no bound information
            }
            if (!bounds.has_values) {
                bounds.has_values = true;
                bounds.min = bounds.max = *value;
            } else {
                bounds.min = std::min(bounds.min, *value);
                bounds.max = std::max(bounds.max, *value);
            }
        }
        if (!bounds.has_values) {
            ctx.warnings.push_back("metric '" + spec.name +
                                   "' has no defined values in the reference set; defined "
                                   "values will normalize to 50");
        } else if (bounds.min == bounds.max) {
            std::ostringstream msg;
            msg << "metric '" << spec.name << "' is degenerate over the reference set (min = "
                << "max = " << bounds.min << "); all values normalize to 50";
            ctx.warnings.push_back(msg.str());
        }
        ctx.bounds.emplace(spec.name, bounds);
    }
    return ctx;
}

double risk_norm(std::optional<double> value, std::string_view metric,
                 const NormalizationContext& ctx) {
    const auto it = ctx.bounds.find(std::string(metric));
    if (it == ctx.bounds.end()) {
        throw UnknownMetricError("metric '" + std::string(metric) +
                                 "' is not part of the normalization context");
    }
    if (!value) {
        return 100.0;  // no observable value is the worst case
    }
    const MetricBounds& b = it->second;
    if (b.degenerate()) {
        return 50.0;  // no spread to normalize against
    }
    const double range = b.max - b.min;
    const double raw = b.direction == Direction::risk_increasing
                           ? 100.0 * (*value - b.min) / range
                           : 100.0 * (b.max - *value) / range;
    return std::clamp(raw, 0.0, 100.0);
}

}  // namespace rwa
