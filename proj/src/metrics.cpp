#include "rwa/metrics.hpp"

#include "rwa/errors.hpp"

namespace rwa {

double compute_turnover(const AssetSnapshot& a) {
    if (!(a.asset_value > 0.0)) {
        throw ZeroAssetValueError(a.ticker + ": turnover is undefined for zero asset value");
    }
    return a.transfer_volume_30d / a.asset_value;
}

double compute_active_ratio(const AssetSnapshot& a) {
    return static_cast<double>(a.active_addresses_30d) / static_cast<double>(a.holders);
}

double compute_transfer_intensity(const AssetSnapshot& a) {
    return static_cast<double>(a.transfer_count_30d) / static_cast<double>(a.holders);
}

std::optional<double> compute_avg_transfer_size(const AssetSnapshot& a) {
    if (a.transfer_count_30d == 0) {
        return std::nullopt;
    }
    return a.transfer_volume_30d / static_cast<double>(a.transfer_count_30d);
}

double compute_avg_value_per_holder(const AssetSnapshot& a) {
    return a.asset_value / static_cast<double>(a.holders);
}

double compute_hhi(const ChainDistribution& d) {
    double sum = 0.0;
    for (const auto& entry : d.entries) {
        sum += entry.share * entry.share;
    }
    return sum;
}

DerivedMetrics derive_metrics(const AssetSnapshot& a, NhhiSource nhhi_source) {
    const ChainDistribution* nhhi_dist = &a.holder_chain_dist;
    if (nhhi_source == NhhiSource::active) {
        nhhi_dist = &a.active_chain_dist;
    } else if (nhhi_source == NhhiSource::volume) {
        nhhi_dist = &a.volume_chain_dist;
    }
    return DerivedMetrics{
        .turnover = compute_turnover(a),
        .active_ratio = compute_active_ratio(a),
        .transfer_intensity = compute_transfer_intensity(a),
        .avg_transfer_size = compute_avg_transfer_size(a),
        .avg_value_per_holder = compute_avg_value_per_holder(a),
        .nhhi = compute_hhi(*nhhi_dist),
        .hhi_active = compute_hhi(a.active_chain_dist),
        .hhi_volume = compute_hhi(a.volume_chain_dist),
    };
}

}  // namespace rwa
