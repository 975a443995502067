#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace nashcurve {

/// Flat-file memoization of CLI results: one JSON file per canonical key,
/// written atomically (temp file then rename). A hit must be byte-identical
/// to a fresh recomputation; the stored key is checked on load to guard the
/// filename hash.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<std::string> load(const std::string& key) const {
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        try {
            const nlohmann::json j = nlohmann::json::parse(in);
            if (j.at("key").get<std::string>() != key) return std::nullopt;
            return j.at("output").get<std::string>();
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void store(const std::string& key, const std::string& output) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return; // caching is best effort
        const nlohmann::json j{{"key", key},
                               {"created_at", timestamp()},
                               {"output", output}};
        const std::filesystem::path target = path_for(key);
        const std::filesystem::path tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return;
            out << j.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, target, ec);
    }

    static std::uint64_t fnv1a(const std::string& text) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : text) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::filesystem::path path_for(const std::string& key) const {
        std::ostringstream name;
        name << std::hex << fnv1a(key) << ".json";
        return dir_ / name.str();
    }

    static std::string timestamp() {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        return buf;
    }

    std::filesystem::path dir_;
};

} // namespace nashcurve
