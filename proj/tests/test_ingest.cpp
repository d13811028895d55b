#include <doctest.h>

#include <random>

#include "rwa/errors.hpp"
#include "rwa/ingest.hpp"
#include "support/paths.hpp"
#include "support/synth.hpp"

using namespace rwa;

namespace {

const ParseOptions kPilotOpts{{"USDC"}};

}  // namespace

TEST_CASE("parse_snapshot_csv: pilot fixture row lands field for field") {
    const auto set = parse_snapshot_csv(testutil::pilot_csv(), testutil::pilot_chains(),
                                        kPilotOpts);
    REQUIRE(set.assets.size() == 10);
    CHECK(set.as_of == "May 2026");

    const AssetSnapshot& buidl = set.assets[0];
    CHECK(buidl.ticker == "BUIDL");
    CHECK(buidl.category == "Treasury");
    CHECK(buidl.asset_value == 2487654577.0);
    CHECK(buidl.holders == 108);
    CHECK(buidl.active_addresses_30d == 24);
    CHECK(buidl.transfer_volume_30d == 1092239594.0);
    CHECK(buidl.transfer_count_30d == 88);
    CHECK(buidl.holder_chain_dist.entries.size() == 3);
    CHECK(buidl.role == AssetRole::scored);

    const AssetSnapshot& usdc = set.assets[4];
    CHECK(usdc.ticker == "USDC");
    CHECK(usdc.role == AssetRole::benchmark);
    CHECK(set.notes.empty());
}

TEST_CASE("parse_snapshot_csv: order matches file row order") {
    const auto set = parse_snapshot_csv(testutil::pilot_csv(), testutil::pilot_chains());
    const std::vector<std::string> expected = {"BUIDL", "BENJI", "OUSG",    "USTB", "USDC",
                                               "USDY",  "HLSCOPE", "STAC", "PAXG", "XAUT"};
    REQUIRE(set.assets.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(set.assets[i].ticker == expected[i]);
    }
}

TEST_CASE("parse_snapshot_csv: validation failures carry a line locus") {
    const std::string header =
        "ticker,category,asset_value,holders,active_addresses_30d,transfer_volume_30d,"
        "transfer_count_30d\n";

    SUBCASE("zero holders") {
        const std::string csv = header + "AAA,Gold,10,1,0,0,0\nBBB,Gold,10,0,0,0,0\n";
        CHECK_THROWS_WITH_AS(parse_snapshot_csv(csv, ""),
                             doctest::Contains("line 3"), ValueError);
    }
    SUBCASE("duplicate ticker") {
        const std::string csv = header + "PAXG,Gold,10,1,0,0,0\nPAXG,Gold,20,2,0,0,0\n";
        CHECK_THROWS_AS(parse_snapshot_csv(csv, ""), DuplicateTickerError);
    }
    SUBCASE("non-numeric cell") {
        const std::string csv = header + "AAA,Gold,ten,1,0,0,0\nBBB,Gold,10,1,0,0,0\n";
        CHECK_THROWS_WITH_AS(parse_snapshot_csv(csv, ""),
                             doctest::Contains("asset_value"), ValueError);
    }
    SUBCASE("negative count") {
        const std::string csv = header + "AAA,Gold,10,1,-2,0,0\nBBB,Gold,10,1,0,0,0\n";
        CHECK_THROWS_AS(parse_snapshot_csv(csv, ""), ValueError);
    }
    SUBCASE("wrong field count") {
        const std::string csv = header + "AAA,Gold,10,1,0,0\n";
        CHECK_THROWS_WITH_AS(parse_snapshot_csv(csv, ""),
                             doctest::Contains("expected 7 fields"), SchemaError);
    }
    SUBCASE("unknown header") {
        const std::string csv = "ticker,category,value\nAAA,Gold,10\n";
        CHECK_THROWS_AS(parse_snapshot_csv(csv, ""), SchemaError);
    }
    SUBCASE("unknown chains dimension") {
        const std::string csv = header + "AAA,Gold,10,1,0,0,0\nBBB,Gold,10,1,0,0,0\n";
        CHECK_THROWS_WITH_AS(
            parse_snapshot_csv(csv, "ticker,dimension,chain_id,weight\nAAA,wat,eth,1\n"),
            doctest::Contains("unknown dimension"), SchemaError);
    }
}

TEST_CASE("parse_snapshot_csv: missing chain distributions default to 'unknown'") {
    const std::string csv =
        "ticker,category,asset_value,holders,active_addresses_30d,transfer_volume_30d,"
        "transfer_count_30d\n"
        "AAA,Gold,10,1,0,0,0\n"
        "BBB,Gold,10,1,0,0,0\n";
    const std::string chains = "ticker,dimension,chain_id,weight\nAAA,holders,eth,1\n";
    const auto set = parse_snapshot_csv(csv, chains);

    CHECK(set.assets[0].holder_chain_dist.entries[0].chain_id == "eth");
    CHECK(set.assets[0].active_chain_dist.entries[0].chain_id == "unknown");
    CHECK(set.assets[1].holder_chain_dist.entries[0].chain_id == "unknown");
    CHECK(set.assets[1].holder_chain_dist.entries[0].share == 1.0);
    REQUIRE(set.notes.size() == 2);
    CHECK(set.notes[0] == "AAA: no chain distribution for active and volume; defaulting to a "
                          "single 'unknown' chain");
}

TEST_CASE("parse_snapshot_json: pilot fixture agrees with the CSV fixture") {
    const auto from_csv = parse_snapshot_csv(testutil::pilot_csv(), testutil::pilot_chains(),
                                             kPilotOpts);
    const auto from_json = parse_snapshot_json(testutil::pilot_json(), kPilotOpts);
    CHECK(from_csv.as_of == from_json.as_of);
    REQUIRE(from_csv.assets.size() == from_json.assets.size());
    for (std::size_t i = 0; i < from_csv.assets.size(); ++i) {
        CHECK(from_csv.assets[i] == from_json.assets[i]);
    }
}

TEST_CASE("parse_snapshot_json: schema violations are rejected with loci") {
    CHECK_THROWS_AS(parse_snapshot_json("{not json"), SchemaError);
    CHECK_THROWS_AS(parse_snapshot_json("42"), SchemaError);
    CHECK_THROWS_WITH_AS(
        parse_snapshot_json(R"({"assets": [{"ticker": "A", "category": "x"}]})"),
        doctest::Contains("missing field"), SchemaError);
    CHECK_THROWS_WITH_AS(
        parse_snapshot_json(
            R"({"assets": [{"ticker": "A", "category": "x", "asset_value": 1,
                "holders": 1, "active_addresses_30d": 0, "transfer_volume_30d": 0,
                "transfer_count_30d": 0, "surprise": 1}]})"),
        doctest::Contains("unknown field 'surprise'"), SchemaError);
}

TEST_CASE("round trip: parse(emit(set)) reproduces every field") {
    std::mt19937_64 rng(20260510);
    for (int iter = 0; iter < 50; ++iter) {
        const SnapshotSet set = testutil::random_set(rng);
        std::vector<std::string> benchmarks;
        for (const auto& a : set.assets) {
            if (a.role == AssetRole::benchmark) benchmarks.push_back(a.ticker);
        }
        const ParseOptions opts{benchmarks};

        const SnapshotSet via_csv =
            parse_snapshot_csv(emit_snapshot_csv(set), emit_chains_csv(set), opts);
        REQUIRE(via_csv.assets.size() == set.assets.size());
        CHECK(via_csv.as_of == set.as_of);
        for (std::size_t i = 0; i < set.assets.size(); ++i) {
            CHECK(via_csv.assets[i] == set.assets[i]);
        }

        const SnapshotSet via_json = parse_snapshot_json(emit_snapshot_json(set), opts);
        REQUIRE(via_json.assets.size() == set.assets.size());
        CHECK(via_json.as_of == set.as_of);
        for (std::size_t i = 0; i < set.assets.size(); ++i) {
            CHECK(via_json.assets[i] == set.assets[i]);
        }
    }
}

TEST_CASE("load_snapshot_file: missing file raises FileNotFound") {
    CHECK_THROWS_AS(load_snapshot_file("/does/not/exist.csv", InputFormat::csv),
                    FileNotFoundError);
}
