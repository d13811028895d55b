#pragma once

#include <optional>

#include "rwa/snapshot.hpp"

namespace rwa {

/// Which chain distribution feeds the network concentration metric (NHHI).
enum class NhhiSource { holders, active, volume };

/// The seven derived indicators computed per asset.
///
/// avg_transfer_size is undefined exactly when transfer_count_30d = 0; an
/// asset with no transfers has no observable transfer size, and the
/// normalizer maps that to maximum risk rather than treating it as zero.
struct DerivedMetrics {
    double turnover = 0.0;            // transfer volume / asset value
    double active_ratio = 0.0;        // active addresses / holders
    double transfer_intensity = 0.0;  // transfer count / holders
    std::optional<double> avg_transfer_size;  // USD per transfer
    double avg_value_per_holder = 0.0;        // USD
    double nhhi = 0.0;        // network concentration, per configured source
    double hhi_active = 0.0;  // concentration of active addresses by chain
    double hhi_volume = 0.0;  // concentration of transfer volume by chain
};

/// transfer_volume_30d / asset_value. Throws ZeroAssetValue when
/// asset_value <= 0.
double compute_turnover(const AssetSnapshot& a);

/// active_addresses_30d / holders. May exceed 1 (address churn).
double compute_active_ratio(const AssetSnapshot& a);

/// transfer_count_30d / holders.
double compute_transfer_intensity(const AssetSnapshot& a);

/// transfer_volume_30d / transfer_count_30d, or nullopt when there were no
/// transfers.
std::optional<double> compute_avg_transfer_size(const AssetSnapshot& a);

/// asset_value / holders.
double compute_avg_value_per_holder(const AssetSnapshot& a);

/// Herfindahl-Hirschman index: sum of squared shares. Lies in [1/k, 1] for a
/// canonical distribution over k chains.
double compute_hhi(const ChainDistribution& d);

/// Bundles all seven computations for one asset.
DerivedMetrics derive_metrics(const AssetSnapshot& a,
                              NhhiSource nhhi_source = NhhiSource::holders);

}  // namespace rwa
