#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rwa/metrics.hpp"
#include "rwa/scorer.hpp"

namespace rwa {

enum class OutputFormat { csv, markdown, json };

/// Per-asset derived metrics in input order, as shown in the report's
/// metrics table.
struct AssetMetricsRow {
    std::string ticker;
    std::string category;
    DerivedMetrics metrics;
};

struct ReportStyle {
    OutputFormat format = OutputFormat::markdown;
    int precision = 2;  // decimals for scores, in [0, 6]
};

/// Renders the scored table, the derived-metrics table and the warnings
/// section in the requested format. Output is deterministic and byte-stable:
/// fixed column order, fixed decimal formatting, LF line endings. The JSON
/// form carries full-precision values alongside the rounded display strings.
std::string emit_report(const ScoreTable& table, const std::vector<AssetMetricsRow>& metrics,
                        const ReportStyle& style);

}  // namespace rwa
