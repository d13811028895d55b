#include <doctest.h>

#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "rwa/errors.hpp"
#include "rwa/ingest.hpp"
#include "rwa/report.hpp"
#include "support/paths.hpp"

using namespace rwa;

namespace {

struct Rendered {
    ScoreTable table;
    std::vector<AssetMetricsRow> metrics;
};

Rendered pilot_scored() {
    const auto set = parse_snapshot_csv(testutil::pilot_csv(), testutil::pilot_chains(),
                                        {{"USDC"}});
    Rendered r;
    r.table = score_set(set);
    for (const auto& a : set.assets) {
        r.metrics.push_back({a.ticker, a.category, derive_metrics(a)});
    }
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("markdown report: pinned header and STAC first") {
    const auto r = pilot_scored();
    const std::string report = emit_report(r.table, r.metrics, {OutputFormat::markdown, 2});
    const auto lines = lines_of(report);

    std::size_t header = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i] == "| Ticker | Category | L | C | M | Composite |") {
            header = i;
            break;
        }
    }
    REQUIRE(header < lines.size());
    CHECK(lines[header + 1] == "| --- | --- | --- | --- | --- | --- |");
    CHECK(lines[header + 2] ==
          "| STAC | Structured credit | 67.92 | 100.00 | 100.00 | 89.31 |");

    CHECK(report.find("### Benchmarks") != std::string::npos);
    CHECK(report.find("| USDC | Stablecoins | 0.00 | 0.00 | 0.00 | 0.00 |") !=
          std::string::npos);
    CHECK(report.find("## Sensitivity") != std::string::npos);
    CHECK(report.find("## Warnings") != std::string::npos);
    CHECK(report.find('\r') == std::string::npos);  // LF only
}

TEST_CASE("csv report: nine scored rows plus a benchmark section") {
    const auto r = pilot_scored();
    const std::string report = emit_report(r.table, r.metrics, {OutputFormat::csv, 2});

    int scored = 0;
    int benchmark = 0;
    for (const auto& line : lines_of(report)) {
        if (line.find(",scored,") != std::string::npos) ++scored;
        if (line.find(",benchmark,") != std::string::npos) ++benchmark;
    }
    CHECK(scored == 9);
    CHECK(benchmark == 1);
    CHECK(report.find("ticker,category,role,liquidity,concentration,market_quality,"
                      "composite_equal,composite_liquidity-heavy,"
                      "composite_concentration-heavy,composite_market-quality-heavy") !=
          std::string::npos);
    // scored section is ranked, so STAC leads it
    const auto lines = lines_of(report);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        if (lines[i].starts_with("ticker,category,role")) {
            CHECK(lines[i + 1].starts_with("STAC,"));
        }
    }
}

TEST_CASE("precision 0 renders STAC's composite as 89") {
    const auto r = pilot_scored();
    const std::string report = emit_report(r.table, r.metrics, {OutputFormat::markdown, 0});
    CHECK(report.find("| STAC | Structured credit | 68 | 100 | 100 | 89 |") !=
          std::string::npos);
}

TEST_CASE("precision outside [0, 6] is rejected") {
    const auto r = pilot_scored();
    CHECK_THROWS_AS(emit_report(r.table, r.metrics, {OutputFormat::markdown, 7}), ValueError);
    CHECK_THROWS_AS(emit_report(r.table, r.metrics, {OutputFormat::markdown, -1}), ValueError);
}

TEST_CASE("json report: full-precision values reproduce the rounded displays") {
    const auto r = pilot_scored();
    const std::string report = emit_report(r.table, r.metrics, {OutputFormat::json, 2});
    const auto doc = nlohmann::json::parse(report);

    CHECK(doc["as_of"] == "May 2026");
    CHECK(doc["scores"].size() == 9);
    CHECK(doc["benchmarks"].size() == 1);
    CHECK(doc["scores"][0]["ticker"] == "STAC");

    const auto schemes = canonical_weight_schemes();
    for (const auto& row : doc["scores"]) {
        const double l = row["liquidity"]["value"].get<double>();
        const double c = row["concentration"]["value"].get<double>();
        const double m = row["market_quality"]["value"].get<double>();
        for (const auto& scheme : schemes) {
            const double recomputed = composite(l, c, m, scheme);
            std::ostringstream display;
            display << std::fixed << std::setprecision(2) << recomputed;
            CHECK(row["composites"][scheme.name]["display"].get<std::string>() ==
                  display.str());
        }
    }
}

TEST_CASE("reports are byte-stable across runs") {
    const auto r1 = pilot_scored();
    const auto r2 = pilot_scored();
    for (const auto format : {OutputFormat::markdown, OutputFormat::csv, OutputFormat::json}) {
        CHECK(emit_report(r1.table, r1.metrics, {format, 2}) ==
              emit_report(r2.table, r2.metrics, {format, 2}));
    }
}
