#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rwa/ingest.hpp"
#include "rwa/report.hpp"
#include "rwa/scorer.hpp"

namespace rwa {

/// Fully resolved run configuration for one CLI invocation.
struct RunConfig {
    std::filesystem::path input_path;
    std::optional<std::filesystem::path> chain_dist_path;
    InputFormat format_in = InputFormat::csv;
    OutputFormat format_out = OutputFormat::markdown;
    // Empty means auto-detect: the pilot sample defaults to ["USDC"],
    // anything else to no benchmarks.
    std::vector<std::string> benchmark_tickers;
    std::vector<WeightScheme> schemes = canonical_weight_schemes();
    std::string sort_scheme = "equal";
    bool include_benchmarks_in_bounds = true;
    int precision = 2;
    std::optional<std::filesystem::path> output_path;
};

/// Loads, scores and reports per the config. Returns 0 on success, 1 on a
/// validation error and 2 on an I/O error; failures print a human-readable
/// message (with file/row locus where available) to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without argv[0]) into a RunConfig and runs
/// it. Same exit codes as run(); flag errors count as validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rwa
