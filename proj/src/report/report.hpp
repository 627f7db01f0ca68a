#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace iterlab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// One JSON object per line; machine-diffable.
void write_jsonl(const std::string& path, const std::vector<Json>& lines);
std::vector<Json> read_jsonl(const std::string& path);

// CSV with a schema comment line, a header, then rows. Values are printed
// round-trip exact (%.17g).
void write_csv(const std::string& path, const std::string& schema, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::string csv_number(double v);

// Run manifest: re-running it must reproduce every reported number
// bit-exactly (timestamps and runtimes excluded from the comparison).
struct RunManifest {
    std::string command;
    Json params;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string timestamp;
    std::vector<std::string> verdicts;

    Json to_json() const;
    static RunManifest from_json(const Json& j);
    void save(const std::string& path) const;
    static RunManifest load(const std::string& path);
};

std::string now_iso8601();

}  // namespace iterlab
