#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rwa/metrics.hpp"
#include "rwa/snapshot.hpp"

namespace rwa {

/// Direction of risk for a metric column. Protective metrics (e.g. turnover)
/// lower risk as they grow, so their scale is inverted; risk-increasing
/// metrics (e.g. average transfer size) map directly.
enum class Direction { protective, risk_increasing };

struct MetricSpec {
    std::string name;
    Direction direction = Direction::risk_increasing;
};

/// The nine standard metric columns with their risk directions:
/// turnover, active_ratio, transfer_intensity (protective), ats
/// (risk-increasing), holders (protective), avh, nhhi, hhi_active,
/// hhi_volume (risk-increasing).
std::span<const MetricSpec> standard_metrics();

/// Min/max bounds for one metric over the reference set. `has_values` is
/// false when no asset had a defined value for the metric (possible for ats
/// when nothing transferred); such a column is degenerate like min == max.
struct MetricBounds {
    Direction direction = Direction::risk_increasing;
    bool has_values = false;
    double min = 0.0;
    double max = 0.0;

    bool degenerate() const { return !has_values || min == max; }
};

/// Immutable per-metric bounds computed over a reference set of assets.
struct NormalizationContext {
    std::map<std::string, MetricBounds> bounds;
    std::vector<std::string> reference_tickers;
    std::vector<std::string> warnings;  // degenerate columns, empty ats column
};

/// Looks up the named metric's value on one asset. Returns nullopt only for
/// an undefined ats. Throws UnknownMetric for names outside the standard set.
std::optional<double> metric_value(const AssetSnapshot& asset, const DerivedMetrics& m,
                                   std::string_view name);

/// Computes bounds over the scored assets of `set`, plus benchmark assets
/// when `include_benchmarks` is set (the default: published scores require
/// the benchmark inside the min-max bounds). Assets with an undefined value
/// for a metric are excluded from that metric's bounds.
NormalizationContext build_context(const SnapshotSet& set,
                                   std::span<const MetricSpec> metrics,
                                   bool include_benchmarks = true,
                                   NhhiSource nhhi_source = NhhiSource::holders);

/// Directional min-max rescaling onto a 0-100 risk scale.
///
///   risk-increasing:  100 * (x - min) / (max - min)
///   protective:       100 * (max - x) / (max - min)
///
/// Values outside the bounds (scoring a new asset against a frozen context)
/// are clamped into [0, 100]. An undefined value scores 100 (worst observable
/// case). A degenerate column (max == min, or no values at all) scores 50 for
/// every defined value; the corresponding warning is recorded on the context
/// at build time.
double risk_norm(std::optional<double> value, std::string_view metric,
                 const NormalizationContext& ctx);

}  // namespace rwa
