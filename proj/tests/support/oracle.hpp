#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rwa/scorer.hpp"
#include "rwa/snapshot.hpp"

namespace testutil {

struct OracleRow {
    double l = 0.0;
    double c = 0.0;
    double m = 0.0;
    std::map<std::string, double> composites;
};

// Straight-line recomputation of the whole scoring pipeline, kept independent
// of the library implementation: every metric, bound, normalization and mean
// is spelled out here directly over the raw snapshot fields.
inline std::map<std::string, OracleRow> oracle_scores(
    const rwa::SnapshotSet& set, const std::vector<rwa::WeightScheme>& schemes,
    bool include_benchmarks = true) {
    const std::size_t n = set.assets.size();

    const auto hhi = [](const rwa::ChainDistribution& d) {
        double sum = 0.0;
        for (const auto& e : d.entries) {
            sum += e.share * e.share;
        }
        return sum;
    };

    // nine metric columns; nullopt marks an undefined average transfer size
    std::vector<std::vector<std::optional<double>>> columns(9);
    std::vector<bool> protective = {true, true, true, false, true, false, false, false, false};
    for (const auto& a : set.assets) {
        const double holders = static_cast<double>(a.holders);
        columns[0].push_back(a.transfer_volume_30d / a.asset_value);
        columns[1].push_back(static_cast<double>(a.active_addresses_30d) / holders);
        columns[2].push_back(static_cast<double>(a.transfer_count_30d) / holders);
        columns[3].push_back(a.transfer_count_30d == 0
                                 ? std::optional<double>{}
                                 : std::optional<double>{a.transfer_volume_30d /
                                                         static_cast<double>(
                                                             a.transfer_count_30d)});
        columns[4].push_back(holders);
        columns[5].push_back(a.asset_value / holders);
        columns[6].push_back(hhi(a.holder_chain_dist));
        columns[7].push_back(hhi(a.active_chain_dist));
        columns[8].push_back(hhi(a.volume_chain_dist));
    }

    struct Bounds {
        bool any = false;
        double lo = 0.0;
        double hi = 0.0;
    };
    std::vector<Bounds> bounds(9);
    for (std::size_t col = 0; col < 9; ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            if (set.assets[i].role == rwa::AssetRole::benchmark && !include_benchmarks) {
                continue;
            }
            if (!columns[col][i]) {
                continue;
            }
            const double v = *columns[col][i];
            if (!bounds[col].any) {
                bounds[col] = {true, v, v};
            } else {
                bounds[col].lo = std::min(bounds[col].lo, v);
                bounds[col].hi = std::max(bounds[col].hi, v);
            }
        }
    }

    const auto norm = [&](std::size_t col, std::size_t i) {
        if (!columns[col][i]) {
            return 100.0;
        }
        const Bounds& b = bounds[col];
        if (!b.any || b.lo == b.hi) {
            return 50.0;
        }
        const double x = *columns[col][i];
        const double raw = protective[col] ? 100.0 * (b.hi - x) / (b.hi - b.lo)
                                           : 100.0 * (x - b.lo) / (b.hi - b.lo);
        return std::clamp(raw, 0.0, 100.0);
    };

    std::map<std::string, OracleRow> out;
    for (std::size_t i = 0; i < n; ++i) {
        OracleRow row;
        row.l = (norm(0, i) + norm(1, i) + norm(2, i) + norm(3, i)) / 4.0;
        row.c = (norm(4, i) + norm(5, i) + norm(6, i)) / 3.0;
        row.m = (norm(7, i) + norm(8, i)) / 2.0;
        for (const auto& s : schemes) {
            row.composites[s.name] = s.w_l * row.l + s.w_c * row.c + s.w_m * row.m;
        }
        out.emplace(set.assets[i].ticker, std::move(row));
    }
    return out;
}

}  // namespace testutil
