#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rwa {

struct ChainShare {
    std::string chain_id;
    double share = 0.0;

    bool operator==(const ChainShare&) const = default;
};

/// Cross-chain distribution in canonical form: unique chain ids, shares >= 0,
/// shares summing to 1 (within 1e-3 after canonicalization).
struct ChainDistribution {
    std::vector<ChainShare> entries;

    bool operator==(const ChainDistribution&) const = default;
};

/// Canonicalizes raw per-chain weights into shares.
///
/// Accepts either raw counts/amounts (all-integral weights, any total) or
/// pre-normalized shares (fractional weights whose sum must lie in
/// [0.999, 1.001] to tolerate display rounding; anything else is rejected
/// as corrupt). Weights already summing to 1 within 1e-12 are kept as-is so
/// canonicalization is idempotent.
ChainDistribution normalize_chain_shares(
    const std::vector<std::pair<std::string, double>>& raw,
    const std::string& locus = {});

enum class AssetRole { scored, benchmark };

/// One asset's raw public observables plus its scoring role.
struct AssetSnapshot {
    std::string ticker;    // non-empty, uppercase, unique within a set
    std::string category;
    double asset_value = 0.0;  // USD
    std::int64_t holders = 1;
    std::int64_t active_addresses_30d = 0;
    double transfer_volume_30d = 0.0;  // USD
    std::int64_t transfer_count_30d = 0;
    ChainDistribution holder_chain_dist;
    ChainDistribution active_chain_dist;
    ChainDistribution volume_chain_dist;
    AssetRole role = AssetRole::scored;

    bool operator==(const AssetSnapshot&) const = default;
};

/// An ordered collection of snapshots taken at one point in time.
struct SnapshotSet {
    std::vector<AssetSnapshot> assets;  // preserves file row order
    std::string as_of;
    std::vector<std::string> notes;  // data caveats surfaced into report warnings
};

/// Throws if the distribution violates its invariants (empty, duplicate
/// chain ids, negative shares, sum off by more than 1e-3).
void validate_distribution(const ChainDistribution& dist, const std::string& locus);

/// Throws ValueError/EmptyDistribution/... on any single-asset invariant
/// violation: empty or lowercase ticker, negative values, holders < 1,
/// transfer volume without transfers, invalid distributions.
void validate_asset(const AssetSnapshot& asset, const std::string& locus);

/// Set-level invariants: at least 2 assets, at least 1 scored asset,
/// unique tickers.
void validate_set(const SnapshotSet& set);

/// Marks every asset whose ticker appears in `benchmark_tickers` as a
/// benchmark and everything else as scored.
void assign_roles(SnapshotSet& set, std::span<const std::string> benchmark_tickers);

}  // namespace rwa
