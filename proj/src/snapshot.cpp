#include "rwa/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "rwa/errors.hpp"

namespace rwa {

namespace {

std::string at(const std::string& locus) {
    return locus.empty() ? std::string{} : locus + ": ";
}

bool is_integral(double w) {
    return std::floor(w) == w;
}

}  // namespace

ChainDistribution normalize_chain_shares(const std::vector<std::pair<std::string, double>>& raw,
                                         const std::string& locus) {
    if (raw.empty()) {
        throw EmptyDistributionError(at(locus) + "chain distribution has no entries");
    }
    double sum = 0.0;
    bool all_integral = true;
    std::set<std::string> seen;
    for (const auto& [chain_id, weight] : raw) {
        if (chain_id.empty()) {
            throw ValueError(at(locus) + "chain distribution has an empty chain id");
        }
        if (!seen.insert(chain_id).second) {
            throw ValueError(at(locus) + "duplicate chain id '" + chain_id +
                             "' in distribution");
        }
        if (!(weight >= 0.0)) {
            std::ostringstream msg;
            msg << at(locus) << "negative weight " << weight << " for chain '" << chain_id
                << "'";
            throw ValueError(msg.str());
        }
        all_integral = all_integral && is_integral(weight);
        sum += weight;
    }
    if (sum == 0.0) {
        throw AllZeroWeightsError(at(locus) + "all chain weights are zero");
    }
    // Fractional weights claim to be shares already; accept display rounding
    // but reject anything further off as corrupt.
    if (!all_integral && (sum < 0.999 || sum > 1.001)) {
        std::ostringstream msg;
        msg << at(locus) << "chain shares sum to " << sum << ", expected 1 within [0.999, 1.001]";
        throw ValueError(msg.str());
    }

    ChainDistribution dist;
    dist.entries.reserve(raw.size());
    const bool already_canonical = std::abs(sum - 1.0) <= 1e-12;
    for (const auto& [chain_id, weight] : raw) {
        dist.entries.push_back({chain_id, already_canonical ? weight : weight / sum});
    }
    return dist;
}

void validate_distribution(const ChainDistribution& dist, const std::string& locus) {
    if (dist.entries.empty()) {
        throw EmptyDistributionError(at(locus) + "chain distribution has no entries");
    }
    double sum = 0.0;
    std::set<std::string> seen;
    for (const auto& entry : dist.entries) {
        if (entry.chain_id.empty()) {
            throw ValueError(at(locus) + "chain distribution has an empty chain id");
        }
        if (!seen.insert(entry.chain_id).second) {
            throw ValueError(at(locus) + "duplicate chain id '" + entry.chain_id +
                             "' in distribution");
        }
        if (!(entry.share >= 0.0)) {
            throw ValueError(at(locus) + "negative share for chain '" + entry.chain_id + "'");
        }
        sum += entry.share;
    }
    if (std::abs(sum - 1.0) > 1e-3) {
        std::ostringstream msg;
        msg << at(locus) << "chain shares sum to " << sum << ", expected 1 within 1e-3";
        throw ValueError(msg.str());
    }
}

void validate_asset(const AssetSnapshot& asset, const std::string& locus) {
    const std::string where = locus.empty() ? asset.ticker : locus;
    if (asset.ticker.empty()) {
        throw ValueError(at(where) + "ticker is empty");
    }
    if (std::ranges::any_of(asset.ticker, [](unsigned char c) { return std::islower(c); })) {
        throw ValueError(at(where) + "ticker '" + asset.ticker + "' must be uppercase");
    }
    if (!(asset.asset_value >= 0.0)) {
        throw ValueError(at(where) + "asset_value must be >= 0");
    }
    if (asset.holders < 1) {
        throw ValueError(at(where) + "holders must be >= 1 (it divides three metrics)");
    }
    if (asset.active_addresses_30d < 0) {
        throw ValueError(at(where) + "active_addresses_30d must be >= 0");
    }
    if (!(asset.transfer_volume_30d >= 0.0)) {
        throw ValueError(at(where) + "transfer_volume_30d must be >= 0");
    }
    if (asset.transfer_count_30d < 0) {
        throw ValueError(at(where) + "transfer_count_30d must be >= 0");
    }
    if (asset.transfer_volume_30d > 0.0 && asset.transfer_count_30d == 0) {
        throw ValueError(at(where) + "transfer volume is positive but transfer count is zero");
    }
    validate_distribution(asset.holder_chain_dist, where + "/holders");
    validate_distribution(asset.active_chain_dist, where + "/active");
    validate_distribution(asset.volume_chain_dist, where + "/volume");
}

void validate_set(const SnapshotSet& set) {
    if (set.assets.size() < 2) {
        throw ValueError("snapshot set needs at least 2 assets for min-max normalization");
    }
    std::set<std::string> tickers;
    bool any_scored = false;
    for (const auto& asset : set.assets) {
        validate_asset(asset, asset.ticker);
        if (!tickers.insert(asset.ticker).second) {
            throw DuplicateTickerError("duplicate ticker '" + asset.ticker + "'");
        }
        any_scored = any_scored || asset.role == AssetRole::scored;
    }
    if (!any_scored) {
        throw ValueError("snapshot set has no scored assets");
    }
}

void assign_roles(SnapshotSet& set, std::span<const std::string> benchmark_tickers) {
    for (auto& asset : set.assets) {
        const bool is_benchmark =
            std::ranges::find(benchmark_tickers, asset.ticker) != benchmark_tickers.end();
        asset.role = is_benchmark ? AssetRole::benchmark : AssetRole::scored;
    }
}

}  // namespace rwa
