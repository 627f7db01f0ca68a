#include "report/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "core/errors.hpp"

namespace iterlab {

void write_jsonl(const std::string& path, const std::vector<Json>& lines) {
    std::ofstream os(path);
    if (!os) throw Error("write_jsonl: cannot open " + path);
    for (const auto& j : lines) os << j.dump() << "\n";
}

std::vector<Json> read_jsonl(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("read_jsonl: cannot open " + path);
    std::vector<Json> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(Json::parse(line));
    }
    return out;
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::string& schema, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream os(path);
    if (!os) throw Error("write_csv: cannot open " + path);
    os << "# schema=" << schema << " version=" << kSchemaVersion << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

Json RunManifest::to_json() const {
    return Json{{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"command", command},
                {"params", params},               {"seed", seed},                  {"threads", threads},
                {"timestamp", timestamp},         {"verdicts", verdicts}};
}

RunManifest RunManifest::from_json(const Json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.params = j.at("params");
    m.seed = j.at("seed").get<std::uint64_t>();
    m.threads = j.at("threads").get<int>();
    m.timestamp = j.value("timestamp", "");
    if (j.contains("verdicts")) m.verdicts = j.at("verdicts").get<std::vector<std::string>>();
    return m;
}

void RunManifest::save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw Error("RunManifest::save: cannot open " + path);
    os << to_json().dump(2) << "\n";
}

RunManifest RunManifest::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("RunManifest::load: cannot open " + path);
    Json j;
    is >> j;
    return from_json(j);
}

std::string now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace iterlab
