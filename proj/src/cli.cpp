#include "rwa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "rwa/errors.hpp"
#include "rwa/metrics.hpp"
#include "text_util.hpp"

namespace rwa {

namespace {

// The pilot sample ships with USDC as its stablecoin benchmark; when the
// input is exactly this ticker set and no --benchmark flag was given, USDC
// is excluded from the ranking by default.
const std::set<std::string> kPilotTickers = {"BUIDL", "BENJI", "OUSG",    "USTB", "USDC",
                                             "USDY",  "HLSCOPE", "STAC", "PAXG", "XAUT"};

bool is_pilot_sample(const SnapshotSet& set) {
    std::set<std::string> tickers;
    for (const auto& asset : set.assets) {
        tickers.insert(asset.ticker);
    }
    return tickers == kPilotTickers;
}

std::string upper(std::string s) {
    std::ranges::transform(s, s.begin(),
                           [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

WeightScheme parse_weights_flag(const std::string& spec, std::size_t auto_index) {
    std::string name;
    std::string triple = spec;
    if (const auto eq = spec.find('='); eq != std::string::npos) {
        name = spec.substr(0, eq);
        triple = spec.substr(eq + 1);
        if (name.empty()) {
            throw InvalidWeightsError("--weights '" + spec + "': empty scheme name");
        }
    } else {
        name = "custom" + std::to_string(auto_index);
    }
    std::vector<double> weights;
    std::size_t start = 0;
    while (start <= triple.size()) {
        const auto comma = triple.find(',', start);
        const auto part = comma == std::string::npos ? triple.substr(start)
                                                     : triple.substr(start, comma - start);
        const auto value = detail::parse_double(part);
        if (!value) {
            throw InvalidWeightsError("--weights '" + spec + "': non-numeric weight '" + part +
                                      "'");
        }
        weights.push_back(*value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (weights.size() != 3) {
        throw InvalidWeightsError("--weights '" + spec + "': expected NAME=L,C,M or L,C,M");
    }
    WeightScheme scheme{name, weights[0], weights[1], weights[2]};
    validate_scheme(scheme);
    return scheme;
}

int classify(const Error& e, std::ostream& err) {
    err << "error: " << e.what() << "\n";
    return dynamic_cast<const FileNotFoundError*>(&e) ? 2 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.precision < 0 || config.precision > 6) {
            throw ValueError("precision must be in [0, 6], got " +
                             std::to_string(config.precision));
        }

        ParseOptions parse_opts;
        for (const auto& ticker : config.benchmark_tickers) {
            parse_opts.benchmark_tickers.push_back(upper(ticker));
        }
        SnapshotSet set = load_snapshot_file(config.input_path, config.format_in,
                                             config.chain_dist_path, parse_opts);
        if (config.benchmark_tickers.empty() && is_pilot_sample(set)) {
            assign_roles(set, std::vector<std::string>{"USDC"});
            set.notes.push_back("pilot sample detected; defaulting benchmark to USDC");
        }

        ScoringConfig scoring;
        scoring.schemes = config.schemes;
        scoring.sort_scheme = config.sort_scheme;
        scoring.include_benchmarks_in_bounds = config.include_benchmarks_in_bounds;
        const ScoreTable table = score_set(set, scoring);

        std::vector<AssetMetricsRow> metrics;
        metrics.reserve(set.assets.size());
        for (const auto& asset : set.assets) {
            metrics.push_back({asset.ticker, asset.category,
                               derive_metrics(asset, scoring.nhhi_source)});
        }

        const std::string report =
            emit_report(table, metrics, {config.format_out, config.precision});
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file || !(file << report) || !file.flush()) {
                err << "error: cannot write output file: " << config.output_path->string()
                    << "\n";
                return 2;
            }
        } else {
            out << report;
        }
        return 0;
    } catch (const Error& e) {
        return classify(e, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explainable liquidity / concentration / market-quality risk scores for "
                 "tokenized real-world assets"};
    app.name("rwa-score");

    RunConfig config;
    std::string input;
    std::string chains;
    std::string in_format = "csv";
    std::string out_format = "markdown";
    std::vector<std::string> weight_specs;
    std::string sort_scheme;
    std::string output;

    app.add_option("--input", input, "snapshot file to score")->required();
    app.add_option("--chains", chains, "companion chain-distribution CSV");
    app.add_option("--in-format", in_format, "input format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out-format", out_format, "report format")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    app.add_option("--benchmark", config.benchmark_tickers,
                   "ticker to treat as benchmark (repeatable)");
    app.add_option("--weights", weight_specs,
                   "weight scheme NAME=L,C,M or L,C,M (repeatable; replaces the built-ins)");
    app.add_option("--sort", sort_scheme, "scheme whose composite orders the table");
    app.add_flag("--no-benchmark-bounds",
                 "exclude benchmark assets from the normalization bounds");
    app.add_option("--precision", config.precision, "score decimals, 0-6");
    app.add_option("--output", output, "write the report to a file instead of stdout");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    config.input_path = input;
    if (!chains.empty()) {
        config.chain_dist_path = chains;
    }
    config.format_in = in_format == "json" ? InputFormat::json : InputFormat::csv;
    config.format_out = out_format == "csv"    ? OutputFormat::csv
                        : out_format == "json" ? OutputFormat::json
                                               : OutputFormat::markdown;
    config.include_benchmarks_in_bounds = app.count("--no-benchmark-bounds") == 0;
    if (!output.empty()) {
        config.output_path = output;
    }

    try {
        if (!weight_specs.empty()) {
            config.schemes.clear();
            std::size_t auto_index = 0;
            for (const auto& spec : weight_specs) {
                if (spec.find('=') == std::string::npos) {
                    ++auto_index;
                }
                config.schemes.push_back(parse_weights_flag(spec, auto_index));
            }
        }
        if (!sort_scheme.empty()) {
            config.sort_scheme = sort_scheme;
        } else {
            const bool has_equal = std::ranges::any_of(
                config.schemes, [](const WeightScheme& s) { return s.name == "equal"; });
            config.sort_scheme = has_equal ? "equal" : config.schemes.front().name;
        }
    } catch (const Error& e) {
        return classify(e, err);
    }

    return run(config, out, err);
}

}  // namespace rwa
