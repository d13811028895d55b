// Python bindings for the scoring core. Exposes the snapshot model, the
// derived-metric computations, the directional normalizer and the scoring /
// reporting operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "rwa/cli.hpp"
#include "rwa/errors.hpp"
#include "rwa/ingest.hpp"
#include "rwa/metrics.hpp"
#include "rwa/normalizer.hpp"
#include "rwa/report.hpp"
#include "rwa/scorer.hpp"
#include "rwa/snapshot.hpp"

namespace py = pybind11;
using namespace rwa;

namespace {

ParseOptions make_opts(const std::vector<std::string>& benchmarks) {
    ParseOptions opts;
    opts.benchmark_tickers = benchmarks;
    return opts;
}

OutputFormat parse_out_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "markdown") return OutputFormat::markdown;
    if (name == "json") return OutputFormat::json;
    throw ValueError("unknown output format '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Liquidity / concentration / market-quality risk scoring for tokenized "
              "real-world assets";

    const auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<FileNotFoundError>(m, "FileNotFoundError", base.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
    py::register_exception<ValueError>(m, "ValueError", base.ptr());
    py::register_exception<DuplicateTickerError>(m, "DuplicateTickerError", base.ptr());
    py::register_exception<EmptyDistributionError>(m, "EmptyDistributionError", base.ptr());
    py::register_exception<AllZeroWeightsError>(m, "AllZeroWeightsError", base.ptr());
    py::register_exception<EmptyReferenceSetError>(m, "EmptyReferenceSetError", base.ptr());
    py::register_exception<UnknownMetricError>(m, "UnknownMetricError", base.ptr());
    py::register_exception<InvalidWeightsError>(m, "InvalidWeightsError", base.ptr());
    py::register_exception<ZeroAssetValueError>(m, "ZeroAssetValueError", base.ptr());

    py::enum_<AssetRole>(m, "AssetRole")
        .value("scored", AssetRole::scored)
        .value("benchmark", AssetRole::benchmark);
    py::enum_<NhhiSource>(m, "NhhiSource")
        .value("holders", NhhiSource::holders)
        .value("active", NhhiSource::active)
        .value("volume", NhhiSource::volume);
    py::enum_<Direction>(m, "Direction")
        .value("protective", Direction::protective)
        .value("risk_increasing", Direction::risk_increasing);
    py::enum_<InputFormat>(m, "InputFormat")
        .value("csv", InputFormat::csv)
        .value("json", InputFormat::json);

    py::class_<ChainShare>(m, "ChainShare")
        .def(py::init<std::string, double>(), py::arg("chain_id"), py::arg("share"))
        .def_readwrite("chain_id", &ChainShare::chain_id)
        .def_readwrite("share", &ChainShare::share)
        .def("__repr__", [](const ChainShare& s) {
            return "ChainShare(" + s.chain_id + ", " + std::to_string(s.share) + ")";
        });

    py::class_<ChainDistribution>(m, "ChainDistribution")
        .def(py::init<>())
        .def_readwrite("entries", &ChainDistribution::entries)
        .def("__len__", [](const ChainDistribution& d) { return d.entries.size(); });

    py::class_<AssetSnapshot>(m, "AssetSnapshot")
        .def(py::init<>())
        .def_readwrite("ticker", &AssetSnapshot::ticker)
        .def_readwrite("category", &AssetSnapshot::category)
        .def_readwrite("asset_value", &AssetSnapshot::asset_value)
        .def_readwrite("holders", &AssetSnapshot::holders)
        .def_readwrite("active_addresses_30d", &AssetSnapshot::active_addresses_30d)
        .def_readwrite("transfer_volume_30d", &AssetSnapshot::transfer_volume_30d)
        .def_readwrite("transfer_count_30d", &AssetSnapshot::transfer_count_30d)
        .def_readwrite("holder_chain_dist", &AssetSnapshot::holder_chain_dist)
        .def_readwrite("active_chain_dist", &AssetSnapshot::active_chain_dist)
        .def_readwrite("volume_chain_dist", &AssetSnapshot::volume_chain_dist)
        .def_readwrite("role", &AssetSnapshot::role);

    py::class_<SnapshotSet>(m, "SnapshotSet")
        .def(py::init<>())
        .def_readwrite("assets", &SnapshotSet::assets)
        .def_readwrite("as_of", &SnapshotSet::as_of)
        .def_readwrite("notes", &SnapshotSet::notes);

    py::class_<DerivedMetrics>(m, "DerivedMetrics")
        .def_readonly("turnover", &DerivedMetrics::turnover)
        .def_readonly("active_ratio", &DerivedMetrics::active_ratio)
        .def_readonly("transfer_intensity", &DerivedMetrics::transfer_intensity)
        .def_readonly("avg_transfer_size", &DerivedMetrics::avg_transfer_size)
        .def_readonly("avg_value_per_holder", &DerivedMetrics::avg_value_per_holder)
        .def_readonly("nhhi", &DerivedMetrics::nhhi)
        .def_readonly("hhi_active", &DerivedMetrics::hhi_active)
        .def_readonly("hhi_volume", &DerivedMetrics::hhi_volume);

    py::class_<MetricBounds>(m, "MetricBounds")
        .def_readonly("direction", &MetricBounds::direction)
        .def_readonly("has_values", &MetricBounds::has_values)
        .def_readonly("min", &MetricBounds::min)
        .def_readonly("max", &MetricBounds::max)
        .def("degenerate", &MetricBounds::degenerate);

    py::class_<NormalizationContext>(m, "NormalizationContext")
        .def_readonly("bounds", &NormalizationContext::bounds)
        .def_readonly("reference_tickers", &NormalizationContext::reference_tickers)
        .def_readonly("warnings", &NormalizationContext::warnings);

    py::class_<WeightScheme>(m, "WeightScheme")
        .def(py::init<std::string, double, double, double>(), py::arg("name"),
             py::arg("w_l"), py::arg("w_c"), py::arg("w_m"))
        .def_readwrite("name", &WeightScheme::name)
        .def_readwrite("w_l", &WeightScheme::w_l)
        .def_readwrite("w_c", &WeightScheme::w_c)
        .def_readwrite("w_m", &WeightScheme::w_m);

    py::class_<RiskScores>(m, "RiskScores")
        .def_readonly("ticker", &RiskScores::ticker)
        .def_readonly("liquidity", &RiskScores::liquidity)
        .def_readonly("concentration", &RiskScores::concentration)
        .def_readonly("market_quality", &RiskScores::market_quality)
        .def_readonly("composites", &RiskScores::composites);

    py::class_<ScoreTable>(m, "ScoreTable")
        .def_readonly("rows", &ScoreTable::rows)
        .def_readonly("benchmark_rows", &ScoreTable::benchmark_rows)
        .def_readonly("scheme_names", &ScoreTable::scheme_names)
        .def_readonly("sort_scheme", &ScoreTable::sort_scheme)
        .def_readonly("as_of", &ScoreTable::as_of)
        .def_readonly("warnings", &ScoreTable::warnings);

    py::class_<SensitivityMatrix>(m, "SensitivityMatrix")
        .def_readonly("tickers", &SensitivityMatrix::tickers)
        .def_readonly("scheme_names", &SensitivityMatrix::scheme_names)
        .def_readonly("scores", &SensitivityMatrix::scores);

    py::class_<ScoringConfig>(m, "ScoringConfig")
        .def(py::init<>())
        .def_readwrite("schemes", &ScoringConfig::schemes)
        .def_readwrite("sort_scheme", &ScoringConfig::sort_scheme)
        .def_readwrite("include_benchmarks_in_bounds",
                       &ScoringConfig::include_benchmarks_in_bounds)
        .def_readwrite("nhhi_source", &ScoringConfig::nhhi_source);

    py::class_<AssetMetricsRow>(m, "AssetMetricsRow")
        .def(py::init<>())
        .def_readwrite("ticker", &AssetMetricsRow::ticker)
        .def_readwrite("category", &AssetMetricsRow::category)
        .def_readwrite("metrics", &AssetMetricsRow::metrics);

    // parsing and serialization
    m.def(
        "parse_snapshot_csv",
        [](const std::string& main_csv, const std::string& chains_csv,
           const std::vector<std::string>& benchmarks) {
            return parse_snapshot_csv(main_csv, chains_csv, make_opts(benchmarks));
        },
        py::arg("main_csv"), py::arg("chains_csv") = "",
        py::arg("benchmark_tickers") = std::vector<std::string>{});
    m.def(
        "parse_snapshot_json",
        [](const std::string& text, const std::vector<std::string>& benchmarks) {
            return parse_snapshot_json(text, make_opts(benchmarks));
        },
        py::arg("json_text"), py::arg("benchmark_tickers") = std::vector<std::string>{});
    m.def(
        "load_snapshot_file",
        [](const std::filesystem::path& path, InputFormat format,
           const std::optional<std::filesystem::path>& chains,
           const std::vector<std::string>& benchmarks) {
            return load_snapshot_file(path, format, chains, make_opts(benchmarks));
        },
        py::arg("path"), py::arg("format") = InputFormat::csv,
        py::arg("chains_path") = std::nullopt,
        py::arg("benchmark_tickers") = std::vector<std::string>{});
    m.def("emit_snapshot_csv", &emit_snapshot_csv);
    m.def("emit_chains_csv", &emit_chains_csv);
    m.def("emit_snapshot_json", &emit_snapshot_json);
    m.def(
        "normalize_chain_shares",
        [](const std::vector<std::pair<std::string, double>>& raw) {
            return normalize_chain_shares(raw);
        },
        py::arg("raw"));
    m.def("assign_roles", [](SnapshotSet& set, const std::vector<std::string>& benchmarks) {
        assign_roles(set, benchmarks);
    });

    // derived metrics
    m.def("compute_turnover", &compute_turnover);
    m.def("compute_active_ratio", &compute_active_ratio);
    m.def("compute_transfer_intensity", &compute_transfer_intensity);
    m.def("compute_avg_transfer_size", &compute_avg_transfer_size);
    m.def("compute_avg_value_per_holder", &compute_avg_value_per_holder);
    m.def("compute_hhi", &compute_hhi);
    m.def("derive_metrics", &derive_metrics, py::arg("asset"),
          py::arg("nhhi_source") = NhhiSource::holders);

    // normalization
    m.def("build_context",
          [](const SnapshotSet& set, bool include_benchmarks, NhhiSource source) {
              return build_context(set, standard_metrics(), include_benchmarks, source);
          },
          py::arg("set"), py::arg("include_benchmarks") = true,
          py::arg("nhhi_source") = NhhiSource::holders);
    m.def("risk_norm", &risk_norm, py::arg("value"), py::arg("metric"), py::arg("ctx"));

    // scoring
    m.def("canonical_weight_schemes", &canonical_weight_schemes);
    m.def("liquidity_score", &liquidity_score);
    m.def("concentration_score", &concentration_score);
    m.def("market_quality_score", &market_quality_score);
    m.def("composite", &composite, py::arg("liquidity"), py::arg("concentration"),
          py::arg("market_quality"), py::arg("scheme"));
    m.def("score_set", &score_set, py::arg("set"), py::arg("config") = ScoringConfig{});
    m.def(
        "sensitivity_sweep",
        [](const ScoreTable& table, const std::vector<WeightScheme>& schemes) {
            return sensitivity_sweep(table, schemes);
        },
        py::arg("table"), py::arg("schemes"));

    // reporting
    m.def(
        "emit_report",
        [](const ScoreTable& table, const std::vector<AssetMetricsRow>& metrics,
           const std::string& format, int precision) {
            return emit_report(table, metrics, {parse_out_format(format), precision});
        },
        py::arg("table"), py::arg("metrics"), py::arg("format") = "markdown",
        py::arg("precision") = 2);
}
