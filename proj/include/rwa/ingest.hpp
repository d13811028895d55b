#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwa/snapshot.hpp"

namespace rwa {

enum class InputFormat { csv, json };

struct ParseOptions {
    std::vector<std::string> benchmark_tickers;
};

/// Parses the main snapshot CSV plus the companion long-format chain
/// distribution CSV (`ticker,dimension,chain_id,weight`). `chains_csv` may be
/// empty; assets without a distribution for some dimension fall back to a
/// single synthetic "unknown" chain and get a note on the returned set.
SnapshotSet parse_snapshot_csv(std::string_view main_csv, std::string_view chains_csv,
                               const ParseOptions& opts = {});

/// Parses the JSON form: {"as_of": ..., "assets": [...]} or a bare asset
/// array, each asset carrying the CSV field names plus nested
/// `chain_distributions: {holders: [...], active: [...], volume: [...]}`.
SnapshotSet parse_snapshot_json(std::string_view json_text, const ParseOptions& opts = {});

/// File-based entry point used by the CLI.
SnapshotSet load_snapshot_file(const std::filesystem::path& path, InputFormat format,
                               const std::optional<std::filesystem::path>& chains_path = {},
                               const ParseOptions& opts = {});

// Emitters are exact inverses of the parsers: parse(emit(set)) reproduces
// every field (doubles are printed with shortest round-trip precision).
std::string emit_snapshot_csv(const SnapshotSet& set);
std::string emit_chains_csv(const SnapshotSet& set);
std::string emit_snapshot_json(const SnapshotSet& set);

}  // namespace rwa
