#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testutil {

inline std::filesystem::path data_dir() {
    return std::filesystem::path(RWA_DATA_DIR);
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read test input: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

inline std::string pilot_csv() { return slurp(data_dir() / "pilot_snapshot.csv"); }
inline std::string pilot_chains() { return slurp(data_dir() / "pilot_chains.csv"); }
inline std::string pilot_json() { return slurp(data_dir() / "pilot_snapshot.json"); }

}  // namespace testutil
