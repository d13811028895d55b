#include "rwa/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rwa/errors.hpp"
#include "text_util.hpp"

namespace rwa {

namespace {

using detail::csv_quote;
using detail::format_double;
using detail::parse_double;
using detail::parse_int64;
using detail::split_csv;
using detail::trim;

constexpr std::string_view kMainHeader =
    "ticker,category,asset_value,holders,active_addresses_30d,transfer_volume_30d,"
    "transfer_count_30d";
constexpr std::string_view kChainsHeader = "ticker,dimension,chain_id,weight";
constexpr std::string_view kAsOfPrefix = "# as_of:";

const std::vector<std::string> kDimensions = {"holders", "active", "volume"};

std::string upper(std::string_view s) {
    std::string out(s);
    std::ranges::transform(out, out.begin(),
                           [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

double require_usd(const std::vector<std::string>& fields, std::size_t col,
                   std::string_view name, std::size_t line_no) {
    const auto value = parse_double(fields[col]);
    if (!value) {
        std::ostringstream msg;
        msg << "line " << line_no << ", column " << name << ": non-numeric cell '"
            << fields[col] << "'";
        throw ValueError(msg.str());
    }
    if (*value < 0.0) {
        std::ostringstream msg;
        msg << "line " << line_no << ", column " << name << ": negative value " << *value;
        throw ValueError(msg.str());
    }
    return *value;
}

std::int64_t require_count(const std::vector<std::string>& fields, std::size_t col,
                           std::string_view name, std::size_t line_no) {
    const auto value = parse_int64(fields[col]);
    if (!value) {
        std::ostringstream msg;
        msg << "line " << line_no << ", column " << name << ": non-numeric cell '"
            << fields[col] << "'";
        throw ValueError(msg.str());
    }
    if (*value < 0) {
        std::ostringstream msg;
        msg << "line " << line_no << ", column " << name << ": negative count " << *value;
        throw ValueError(msg.str());
    }
    return *value;
}

// Raw per-(ticker, dimension) weights in file order.
using ChainGroups = std::map<std::string, std::map<std::string, std::vector<std::pair<std::string, double>>>>;

ChainGroups parse_chains_csv(std::string_view chains_csv) {
    ChainGroups groups;
    if (trim(chains_csv).empty()) {
        return groups;
    }
    bool header_seen = false;
    std::size_t line_no = 0;
    for (const auto raw_line : split_lines(chains_csv)) {
        ++line_no;
        const auto line = trim(raw_line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto fields = split_csv(line);
        if (!fields) {
            throw SchemaError("chains file line " + std::to_string(line_no) +
                              ": unbalanced quotes");
        }
        if (!header_seen) {
            std::string joined;
            for (const auto& f : *fields) {
                if (!joined.empty()) joined += ',';
                joined += f;
            }
            if (joined != kChainsHeader) {
                throw SchemaError("chains file line " + std::to_string(line_no) +
                                  ": expected header '" + std::string(kChainsHeader) +
                                  "', got '" + joined + "'");
            }
            header_seen = true;
            continue;
        }
        if (fields->size() != 4) {
            throw SchemaError("chains file line " + std::to_string(line_no) + ": expected 4 "
                              "fields, got " + std::to_string(fields->size()));
        }
        const std::string ticker = upper((*fields)[0]);
        const std::string& dimension = (*fields)[1];
        if (std::ranges::find(kDimensions, dimension) == kDimensions.end()) {
            throw SchemaError("chains file line " + std::to_string(line_no) +
                              ": unknown dimension '" + dimension +
                              "' (expected holders, active or volume)");
        }
        const auto weight = parse_double((*fields)[3]);
        if (!weight) {
            throw ValueError("chains file line " + std::to_string(line_no) +
                             ": non-numeric weight '" + (*fields)[3] + "'");
        }
        if (*weight < 0.0) {
            throw ValueError("chains file line " + std::to_string(line_no) +
                             ": negative weight " + format_double(*weight));
        }
        groups[ticker][dimension].emplace_back((*fields)[2], *weight);
    }
    if (!header_seen) {
        throw SchemaError("chains file: missing header '" + std::string(kChainsHeader) + "'");
    }
    return groups;
}

ChainDistribution default_unknown_dist() {
    return ChainDistribution{{{"unknown", 1.0}}};
}

// Resolves one asset's three distributions from the parsed groups, falling
// back to a single synthetic "unknown" chain per missing dimension.
void attach_distributions(AssetSnapshot& asset, const ChainGroups& groups,
                          std::vector<std::string>& notes) {
    const auto group_it = groups.find(asset.ticker);
    std::vector<std::string> missing;
    const auto resolve = [&](const std::string& dimension) {
        if (group_it != groups.end()) {
            const auto dim_it = group_it->second.find(dimension);
            if (dim_it != group_it->second.end()) {
                return normalize_chain_shares(dim_it->second, asset.ticker + "/" + dimension);
            }
        }
        missing.push_back(dimension);
        return default_unknown_dist();
    };
    asset.holder_chain_dist = resolve("holders");
    asset.active_chain_dist = resolve("active");
    asset.volume_chain_dist = resolve("volume");
    if (!missing.empty()) {
        std::string note = asset.ticker + ": no chain distribution for ";
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (i > 0) note += missing.size() == 2 && i == 1 ? " and " : ", ";
            note += missing[i];
        }
        note += "; defaulting to a single 'unknown' chain";
        notes.push_back(note);
    }
}

void finalize(SnapshotSet& set, const ParseOptions& opts) {
    assign_roles(set, opts.benchmark_tickers);
    validate_set(set);
}

}  // namespace

SnapshotSet parse_snapshot_csv(std::string_view main_csv, std::string_view chains_csv,
                               const ParseOptions& opts) {
    SnapshotSet set;
    const ChainGroups groups = parse_chains_csv(chains_csv);

    bool header_seen = false;
    std::size_t line_no = 0;
    std::vector<std::string> seen_tickers;
    for (const auto raw_line : split_lines(main_csv)) {
        ++line_no;
        const auto line = trim(raw_line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            if (line.starts_with(kAsOfPrefix)) {
                set.as_of = std::string(trim(line.substr(kAsOfPrefix.size())));
            }
            continue;
        }
        const auto fields = split_csv(line);
        if (!fields) {
            throw SchemaError("line " + std::to_string(line_no) + ": unbalanced quotes");
        }
        if (!header_seen) {
            std::string joined;
            for (const auto& f : *fields) {
                if (!joined.empty()) joined += ',';
                joined += f;
            }
            if (joined != kMainHeader) {
                throw SchemaError("line " + std::to_string(line_no) + ": expected header '" +
                                  std::string(kMainHeader) + "', got '" + joined + "'");
            }
            header_seen = true;
            continue;
        }
        if (fields->size() != 7) {
            throw SchemaError("line " + std::to_string(line_no) + ": expected 7 fields, got " +
                              std::to_string(fields->size()));
        }

        AssetSnapshot asset;
        asset.ticker = upper((*fields)[0]);
        if (asset.ticker.empty()) {
            throw ValueError("line " + std::to_string(line_no) + ": empty ticker");
        }
        if (std::ranges::find(seen_tickers, asset.ticker) != seen_tickers.end()) {
            throw DuplicateTickerError("line " + std::to_string(line_no) +
                                       ": duplicate ticker '" + asset.ticker + "'");
        }
        seen_tickers.push_back(asset.ticker);
        asset.category = (*fields)[1];
        asset.asset_value = require_usd(*fields, 2, "asset_value", line_no);
        asset.holders = require_count(*fields, 3, "holders", line_no);
        if (asset.holders == 0) {
            throw ValueError("line " + std::to_string(line_no) +
                             ": holders must be >= 1 (it divides three metrics)");
        }
        asset.active_addresses_30d = require_count(*fields, 4, "active_addresses_30d", line_no);
        asset.transfer_volume_30d = require_usd(*fields, 5, "transfer_volume_30d", line_no);
        asset.transfer_count_30d = require_count(*fields, 6, "transfer_count_30d", line_no);
        if (asset.transfer_volume_30d > 0.0 && asset.transfer_count_30d == 0) {
            throw ValueError("line " + std::to_string(line_no) +
                             ": transfer volume is positive but transfer count is zero");
        }
        attach_distributions(asset, groups, set.notes);
        set.assets.push_back(std::move(asset));
    }
    if (!header_seen) {
        throw SchemaError("missing header '" + std::string(kMainHeader) + "'");
    }
    finalize(set, opts);
    return set;
}

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kAssetFields = {
    "ticker", "category", "asset_value", "holders", "active_addresses_30d",
    "transfer_volume_30d", "transfer_count_30d", "chain_distributions"};

double json_usd(const json& obj, const std::string& field, const std::string& locus) {
    const json& v = obj.at(field);
    if (!v.is_number()) {
        throw ValueError(locus + ": non-numeric value for '" + field + "'");
    }
    const double value = v.get<double>();
    if (value < 0.0) {
        throw ValueError(locus + ": negative value for '" + field + "'");
    }
    return value;
}

std::int64_t json_count(const json& obj, const std::string& field, const std::string& locus) {
    const json& v = obj.at(field);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ValueError(locus + ": '" + field + "' must be an integer count");
    }
    const auto value = v.get<std::int64_t>();
    if (value < 0) {
        throw ValueError(locus + ": negative count for '" + field + "'");
    }
    return value;
}

std::vector<std::pair<std::string, double>> json_dist(const json& arr,
                                                      const std::string& locus) {
    if (!arr.is_array()) {
        throw SchemaError(locus + ": chain distribution must be an array");
    }
    std::vector<std::pair<std::string, double>> raw;
    for (const auto& entry : arr) {
        if (!entry.is_object() || !entry.contains("chain_id") || !entry.contains("weight")) {
            throw SchemaError(locus + ": each distribution entry needs chain_id and weight");
        }
        for (const auto& [key, _] : entry.items()) {
            if (key != "chain_id" && key != "weight") {
                throw SchemaError(locus + ": unknown distribution field '" + key + "'");
            }
        }
        if (!entry["chain_id"].is_string() || !entry["weight"].is_number()) {
            throw ValueError(locus + ": distribution entries must be {chain_id: string, "
                             "weight: number}");
        }
        raw.emplace_back(entry["chain_id"].get<std::string>(), entry["weight"].get<double>());
    }
    return raw;
}

AssetSnapshot parse_json_asset(const json& obj, std::size_t index,
                               std::vector<std::string>& notes) {
    std::string locus = "asset " + std::to_string(index + 1);
    if (obj.is_object() && obj.contains("ticker") && obj["ticker"].is_string()) {
        locus += " (" + obj["ticker"].get<std::string>() + ")";
    }
    if (!obj.is_object()) {
        throw SchemaError(locus + ": expected an object");
    }
    for (const auto& [key, _] : obj.items()) {
        if (std::ranges::find(kAssetFields, key) == kAssetFields.end()) {
            throw SchemaError(locus + ": unknown field '" + key + "'");
        }
    }
    for (const auto& field : kAssetFields) {
        if (field != "chain_distributions" && !obj.contains(field)) {
            throw SchemaError(locus + ": missing field '" + field + "'");
        }
    }
    if (!obj["ticker"].is_string() || !obj["category"].is_string()) {
        throw ValueError(locus + ": ticker and category must be strings");
    }

    AssetSnapshot asset;
    asset.ticker = upper(obj["ticker"].get<std::string>());
    asset.category = obj["category"].get<std::string>();
    asset.asset_value = json_usd(obj, "asset_value", locus);
    asset.holders = json_count(obj, "holders", locus);
    if (asset.holders == 0) {
        throw ValueError(locus + ": holders must be >= 1 (it divides three metrics)");
    }
    asset.active_addresses_30d = json_count(obj, "active_addresses_30d", locus);
    asset.transfer_volume_30d = json_usd(obj, "transfer_volume_30d", locus);
    asset.transfer_count_30d = json_count(obj, "transfer_count_30d", locus);
    if (asset.transfer_volume_30d > 0.0 && asset.transfer_count_30d == 0) {
        throw ValueError(locus + ": transfer volume is positive but transfer count is zero");
    }

    std::vector<std::string> missing;
    const json dists = obj.contains("chain_distributions") ? obj["chain_distributions"]
                                                           : json::object();
    if (!dists.is_object()) {
        throw SchemaError(locus + ": chain_distributions must be an object");
    }
    for (const auto& [key, _] : dists.items()) {
        if (std::ranges::find(kDimensions, key) == kDimensions.end()) {
            throw SchemaError(locus + ": unknown chain_distributions key '" + key + "'");
        }
    }
    const auto resolve = [&](const std::string& dimension) {
        if (dists.contains(dimension)) {
            return normalize_chain_shares(json_dist(dists[dimension], locus),
                                          asset.ticker + "/" + dimension);
        }
        missing.push_back(dimension);
        return default_unknown_dist();
    };
    asset.holder_chain_dist = resolve("holders");
    asset.active_chain_dist = resolve("active");
    asset.volume_chain_dist = resolve("volume");
    if (!missing.empty()) {
        std::string note = asset.ticker + ": no chain distribution for ";
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (i > 0) note += missing.size() == 2 && i == 1 ? " and " : ", ";
            note += missing[i];
        }
        note += "; defaulting to a single 'unknown' chain";
        notes.push_back(note);
    }
    return asset;
}

}  // namespace

SnapshotSet parse_snapshot_json(std::string_view json_text, const ParseOptions& opts) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }

    SnapshotSet set;
    const json* assets = nullptr;
    if (doc.is_array()) {
        assets = &doc;
    } else if (doc.is_object()) {
        for (const auto& [key, _] : doc.items()) {
            if (key != "as_of" && key != "assets") {
                throw SchemaError("unknown top-level field '" + key + "'");
            }
        }
        if (!doc.contains("assets") || !doc["assets"].is_array()) {
            throw SchemaError("missing top-level 'assets' array");
        }
        if (doc.contains("as_of")) {
            if (!doc["as_of"].is_string()) {
                throw ValueError("'as_of' must be a string");
            }
            set.as_of = doc["as_of"].get<std::string>();
        }
        assets = &doc["assets"];
    } else {
        throw SchemaError("expected a JSON object or array at the top level");
    }

    std::vector<std::string> seen;
    for (std::size_t i = 0; i < assets->size(); ++i) {
        AssetSnapshot asset = parse_json_asset((*assets)[i], i, set.notes);
        if (std::ranges::find(seen, asset.ticker) != seen.end()) {
            throw DuplicateTickerError("asset " + std::to_string(i + 1) +
                                       ": duplicate ticker '" + asset.ticker + "'");
        }
        seen.push_back(asset.ticker);
        set.assets.push_back(std::move(asset));
    }
    finalize(set, opts);
    return set;
}

namespace {

std::string read_text_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw FileNotFoundError("file not found: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileNotFoundError("cannot read file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

}  // namespace

SnapshotSet load_snapshot_file(const std::filesystem::path& path, InputFormat format,
                               const std::optional<std::filesystem::path>& chains_path,
                               const ParseOptions& opts) {
    const std::string text = read_text_file(path);
    if (format == InputFormat::json) {
        if (chains_path) {
            throw ValueError("a chains file is only used with CSV input");
        }
        return parse_snapshot_json(text, opts);
    }
    std::string chains_text;
    if (chains_path) {
        chains_text = read_text_file(*chains_path);
    }
    return parse_snapshot_csv(text, chains_text, opts);
}

std::string emit_snapshot_csv(const SnapshotSet& set) {
    std::string out;
    if (!set.as_of.empty()) {
        out += std::string(kAsOfPrefix) + " " + set.as_of + "\n";
    }
    out += std::string(kMainHeader) + "\n";
    for (const auto& a : set.assets) {
        out += csv_quote(a.ticker) + "," + csv_quote(a.category) + "," +
               format_double(a.asset_value) + "," + std::to_string(a.holders) + "," +
               std::to_string(a.active_addresses_30d) + "," +
               format_double(a.transfer_volume_30d) + "," +
               std::to_string(a.transfer_count_30d) + "\n";
    }
    return out;
}

std::string emit_chains_csv(const SnapshotSet& set) {
    std::string out = std::string(kChainsHeader) + "\n";
    for (const auto& a : set.assets) {
        const std::pair<std::string, const ChainDistribution*> dims[] = {
            {"holders", &a.holder_chain_dist},
            {"active", &a.active_chain_dist},
            {"volume", &a.volume_chain_dist},
        };
        for (const auto& [dimension, dist] : dims) {
            for (const auto& entry : dist->entries) {
                out += csv_quote(a.ticker) + "," + dimension + "," +
                       csv_quote(entry.chain_id) + "," + format_double(entry.share) + "\n";
            }
        }
    }
    return out;
}

std::string emit_snapshot_json(const SnapshotSet& set) {
    json doc;
    doc["as_of"] = set.as_of;
    json assets = json::array();
    for (const auto& a : set.assets) {
        json obj;
        obj["ticker"] = a.ticker;
        obj["category"] = a.category;
        obj["asset_value"] = a.asset_value;
        obj["holders"] = a.holders;
        obj["active_addresses_30d"] = a.active_addresses_30d;
        obj["transfer_volume_30d"] = a.transfer_volume_30d;
        obj["transfer_count_30d"] = a.transfer_count_30d;
        json dists;
        const std::pair<std::string, const ChainDistribution*> dims[] = {
            {"holders", &a.holder_chain_dist},
            {"active", &a.active_chain_dist},
            {"volume", &a.volume_chain_dist},
        };
        for (const auto& [dimension, dist] : dims) {
            json arr = json::array();
            for (const auto& entry : dist->entries) {
                arr.push_back({{"chain_id", entry.chain_id}, {"weight", entry.share}});
            }
            dists[dimension] = std::move(arr);
        }
        obj["chain_distributions"] = std::move(dists);
        assets.push_back(std::move(obj));
    }
    doc["assets"] = std::move(assets);
    return doc.dump(2) + "\n";
}

}  // namespace rwa
