#include "rwa/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rwa/errors.hpp"
#include "text_util.hpp"

namespace rwa {

namespace {

using detail::csv_quote;
using json = nlohmann::ordered_json;

std::string fixed(double value, int decimals) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << value;
    return out.str();
}

std::string score_cell(double value, int precision) {
    return fixed(value, precision);
}

std::string ratio_cell(double value) {
    return fixed(value, 4);
}

std::string usd_cell(double value) {
    return fixed(value, 0);
}

std::string ats_cell(const std::optional<double>& value) {
    return value ? usd_cell(*value) : std::string("-");
}

void validate_style(const ReportStyle& style) {
    if (style.precision < 0 || style.precision > 6) {
        throw ValueError("precision must be in [0, 6], got " +
                         std::to_string(style.precision));
    }
}

std::map<std::string, const AssetMetricsRow*> by_ticker(
    const std::vector<AssetMetricsRow>& metrics) {
    std::map<std::string, const AssetMetricsRow*> index;
    for (const auto& row : metrics) {
        index.emplace(row.ticker, &row);
    }
    return index;
}

std::string category_of(const std::map<std::string, const AssetMetricsRow*>& index,
                        const std::string& ticker) {
    const auto it = index.find(ticker);
    return it == index.end() ? std::string{} : it->second->category;
}

// ---- markdown ---------------------------------------------------------------

void md_score_rows(std::string& out, const std::vector<RiskScores>& rows,
                   const std::map<std::string, const AssetMetricsRow*>& index,
                   const std::string& sort_scheme, int precision) {
    out += "| Ticker | Category | L | C | M | Composite |\n";
    out += "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& row : rows) {
        out += "| " + row.ticker + " | " + category_of(index, row.ticker) + " | " +
               score_cell(row.liquidity, precision) + " | " +
               score_cell(row.concentration, precision) + " | " +
               score_cell(row.market_quality, precision) + " | " +
               score_cell(row.composites.at(sort_scheme), precision) + " |\n";
    }
}

std::string emit_markdown(const ScoreTable& table, const std::vector<AssetMetricsRow>& metrics,
                          const ReportStyle& style) {
    const auto index = by_ticker(metrics);
    std::string out = "# Tokenized RWA risk report\n";
    if (!table.as_of.empty()) {
        out += "\nAs of: " + table.as_of + "\n";
    }

    out += "\n## Derived metrics\n\n";
    out += "| Ticker | Category | Turnover | Active ratio | Transfer intensity | AVH | NHHI |\n";
    out += "| --- | --- | --- | --- | --- | --- | --- |\n";
    for (const auto& row : metrics) {
        const DerivedMetrics& m = row.metrics;
        out += "| " + row.ticker + " | " + row.category + " | " + ratio_cell(m.turnover) +
               " | " + ratio_cell(m.active_ratio) + " | " +
               ratio_cell(m.transfer_intensity) + " | " + usd_cell(m.avg_value_per_holder) +
               " | " + ratio_cell(m.nhhi) + " |\n";
    }

    out += "\n## Risk scores (sorted by " + table.sort_scheme + " composite)\n\n";
    md_score_rows(out, table.rows, index, table.sort_scheme, style.precision);

    if (!table.benchmark_rows.empty()) {
        out += "\n### Benchmarks\n\n";
        md_score_rows(out, table.benchmark_rows, index, table.sort_scheme, style.precision);
    }

    if (table.scheme_names.size() > 1) {
        out += "\n## Sensitivity\n\n| Ticker |";
        std::string sep = "| --- |";
        for (const auto& name : table.scheme_names) {
            out += " " + name + " |";
            sep += " --- |";
        }
        out += "\n" + sep + "\n";
        for (const auto& row : table.rows) {
            out += "| " + row.ticker + " |";
            for (const auto& name : table.scheme_names) {
                out += " " + score_cell(row.composites.at(name), style.precision) + " |";
            }
            out += "\n";
        }
    }

    if (!table.warnings.empty()) {
        out += "\n## Warnings\n\n";
        for (const auto& warning : table.warnings) {
            out += "- " + warning + "\n";
        }
    }
    return out;
}

// ---- csv --------------------------------------------------------------------

void csv_score_row(std::string& out, const RiskScores& row,
                   const std::map<std::string, const AssetMetricsRow*>& index,
                   const ScoreTable& table, std::string_view role, int precision) {
    out += csv_quote(row.ticker) + "," + csv_quote(category_of(index, row.ticker)) + "," +
           std::string(role) + "," + score_cell(row.liquidity, precision) + "," +
           score_cell(row.concentration, precision) + "," +
           score_cell(row.market_quality, precision);
    for (const auto& name : table.scheme_names) {
        out += "," + score_cell(row.composites.at(name), precision);
    }
    out += "\n";
}

std::string emit_csv(const ScoreTable& table, const std::vector<AssetMetricsRow>& metrics,
                     const ReportStyle& style) {
    const auto index = by_ticker(metrics);
    std::string out;
    if (!table.as_of.empty()) {
        out += "# as_of: " + table.as_of + "\n";
    }
    out += "# derived_metrics\n";
    out += "ticker,category,turnover,active_ratio,transfer_intensity,avg_transfer_size,"
           "avg_value_per_holder,nhhi,hhi_active,hhi_volume\n";
    for (const auto& row : metrics) {
        const DerivedMetrics& m = row.metrics;
        out += csv_quote(row.ticker) + "," + csv_quote(row.category) + "," +
               ratio_cell(m.turnover) + "," + ratio_cell(m.active_ratio) + "," +
               ratio_cell(m.transfer_intensity) + "," + ats_cell(m.avg_transfer_size) + "," +
               usd_cell(m.avg_value_per_holder) + "," + ratio_cell(m.nhhi) + "," +
               ratio_cell(m.hhi_active) + "," + ratio_cell(m.hhi_volume) + "\n";
    }

    out += "# scores\n";
    out += "ticker,category,role,liquidity,concentration,market_quality";
    for (const auto& name : table.scheme_names) {
        out += ",composite_" + name;
    }
    out += "\n";
    for (const auto& row : table.rows) {
        csv_score_row(out, row, index, table, "scored", style.precision);
    }
    for (const auto& row : table.benchmark_rows) {
        csv_score_row(out, row, index, table, "benchmark", style.precision);
    }
    for (const auto& warning : table.warnings) {
        out += "# warning: " + warning + "\n";
    }
    return out;
}

// ---- json -------------------------------------------------------------------

json score_json(double value, int precision) {
    return json{{"value", value}, {"display", score_cell(value, precision)}};
}

json score_row_json(const RiskScores& row,
                    const std::map<std::string, const AssetMetricsRow*>& index,
                    const ScoreTable& table, int precision) {
    json obj;
    obj["ticker"] = row.ticker;
    obj["category"] = category_of(index, row.ticker);
    obj["liquidity"] = score_json(row.liquidity, precision);
    obj["concentration"] = score_json(row.concentration, precision);
    obj["market_quality"] = score_json(row.market_quality, precision);
    json composites;
    for (const auto& name : table.scheme_names) {
        composites[name] = score_json(row.composites.at(name), precision);
    }
    obj["composites"] = std::move(composites);
    return obj;
}

std::string emit_json(const ScoreTable& table, const std::vector<AssetMetricsRow>& metrics,
                      const ReportStyle& style) {
    const auto index = by_ticker(metrics);
    json doc;
    doc["as_of"] = table.as_of;
    doc["sort_scheme"] = table.sort_scheme;
    doc["schemes"] = table.scheme_names;

    json metric_rows = json::array();
    for (const auto& row : metrics) {
        const DerivedMetrics& m = row.metrics;
        json obj;
        obj["ticker"] = row.ticker;
        obj["category"] = row.category;
        obj["turnover"] = m.turnover;
        obj["active_ratio"] = m.active_ratio;
        obj["transfer_intensity"] = m.transfer_intensity;
        obj["avg_transfer_size"] =
            m.avg_transfer_size ? json(*m.avg_transfer_size) : json(nullptr);
        obj["avg_value_per_holder"] = m.avg_value_per_holder;
        obj["nhhi"] = m.nhhi;
        obj["hhi_active"] = m.hhi_active;
        obj["hhi_volume"] = m.hhi_volume;
        metric_rows.push_back(std::move(obj));
    }
    doc["metrics"] = std::move(metric_rows);

    json scored = json::array();
    for (const auto& row : table.rows) {
        scored.push_back(score_row_json(row, index, table, style.precision));
    }
    doc["scores"] = std::move(scored);

    json benchmarks = json::array();
    for (const auto& row : table.benchmark_rows) {
        benchmarks.push_back(score_row_json(row, index, table, style.precision));
    }
    doc["benchmarks"] = std::move(benchmarks);
    doc["warnings"] = table.warnings;
    return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const ScoreTable& table, const std::vector<AssetMetricsRow>& metrics,
                        const ReportStyle& style) {
    validate_style(style);
    switch (style.format) {
        case OutputFormat::markdown:
            return emit_markdown(table, metrics, style);
        case OutputFormat::csv:
            return emit_csv(table, metrics, style);
        case OutputFormat::json:
            return emit_json(table, metrics, style);
    }
    throw ValueError("unknown output format");
}

}  // namespace rwa
