#pragma once

#include "archtrace/gateway.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>

namespace testsupport {

inline std::filesystem::path fixtures_dir() {
    return std::filesystem::path(ARCHTRACE_FIXTURES_DIR);
}

/// Unique temporary directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        const auto base = std::filesystem::temp_directory_path();
        path_ = base / ("archtrace-test-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

/// Gateway backed by a scripted chat function; embeddings stay offline.
inline archtrace::LlmGateway
scripted_gateway(std::function<std::string(const archtrace::ChatRequest&)> script,
                 archtrace::LlmMode mode = archtrace::LlmMode::Live,
                 std::string cassette_path = {}) {
    archtrace::GatewayConfig config;
    config.mode = mode;
    config.cassette_path = std::move(cassette_path);
    return archtrace::LlmGateway(std::move(config), std::move(script), nullptr);
}

/// Gateway that answers every prompt with the same canned response.
inline archtrace::LlmGateway canned_gateway(std::string response) {
    return scripted_gateway(
        [response = std::move(response)](const archtrace::ChatRequest&) { return response; });
}

/// Gateway for pure offline embedding work; any chat call fails loudly.
inline archtrace::LlmGateway embedding_only_gateway() {
    return scripted_gateway([](const archtrace::ChatRequest&) -> std::string {
        throw std::logic_error("unexpected chat call");
    });
}

inline std::string random_identifier(std::mt19937& rng, std::size_t max_len = 12) {
    static const std::string alphabet =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<std::size_t> char_dist(0, alphabet.size() - 1);
    std::string out;
    const std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(alphabet[char_dist(rng)]);
    }
    return out;
}

/// Random printable field that may contain CSV-hostile characters (no line breaks).
inline std::string random_field(std::mt19937& rng, std::size_t max_len = 10) {
    static const std::string alphabet = "abcXYZ019 ,\"'.:/-_";
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<std::size_t> char_dist(0, alphabet.size() - 1);
    std::string out;
    const std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(alphabet[char_dist(rng)]);
    }
    return out;
}

} // namespace testsupport
