#include "aplab/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace aplab {

std::string fnv1a_hex(const std::string& data) {
    u64 h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void checkpoint_save(const checkpoint& cp, const std::string& path) {
    nlohmann::ordered_json j;
    j["schema_version"] = cp.schema_version;
    j["task"] = cp.task;
    j["param_hash"] = cp.param_hash;
    j["cursor"] = cp.cursor;
    j["findings"] = cp.findings;
    j["undecided"] = cp.undecided;
    j["lines"] = cp.lines;

    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw error("cannot open " + tmp.string() + " for writing");
        f << j.dump();
        f.flush();
        if (!f) throw error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

checkpoint checkpoint_load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw checkpoint_error("cannot open checkpoint " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw checkpoint_error("corrupt checkpoint " + path + ": " + e.what());
    }
    checkpoint cp;
    try {
        cp.schema_version = j.at("schema_version").get<int>();
        if (cp.schema_version != kCheckpointSchemaVersion)
            throw checkpoint_error("checkpoint schema version mismatch in " + path);
        cp.task = j.at("task").get<std::string>();
        cp.param_hash = j.at("param_hash").get<std::string>();
        cp.cursor = j.at("cursor").get<u64>();
        cp.findings = j.at("findings").get<u64>();
        cp.undecided = j.at("undecided").get<u64>();
        cp.lines = j.at("lines").get<std::vector<std::string>>();
    } catch (const checkpoint_error&) {
        throw;
    } catch (const std::exception& e) {
        throw checkpoint_error("corrupt checkpoint " + path + ": " + e.what());
    }
    return cp;
}

} // namespace aplab
