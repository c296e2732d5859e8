#pragma once

#include "archtrace/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace archtrace {

enum class Role { System, User, Assistant };

const char* to_string(Role role);

struct ChatMessage {
    Role role = Role::User;
    std::string content;

    friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

inline ChatMessage user_message(std::string content) {
    return ChatMessage{Role::User, std::move(content)};
}

inline ChatMessage assistant_message(std::string content) {
    return ChatMessage{Role::Assistant, std::move(content)};
}

/// A chat completion request. Temperature 0 and a fixed seed keep runs repeatable
/// on providers that honor them.
struct ChatRequest {
    std::string model;
    double temperature = 0.0;
    long seed = 0;
    std::vector<ChatMessage> messages;

    friend bool operator==(const ChatRequest&, const ChatRequest&) = default;
};

struct EmbeddingRequest {
    std::string model;
    std::vector<std::string> texts;

    friend bool operator==(const EmbeddingRequest&, const EmbeddingRequest&) = default;
};

struct EmbeddingVector {
    std::vector<double> values;

    friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;
};

/// SHA-256 of the input, lowercase hex.
std::string sha256_hex(std::string_view data);

/// Stable lookup key: SHA-256 over a canonical serialization of the request.
std::string canonical_key(const ChatRequest& request);
std::string canonical_key(const EmbeddingRequest& request);

/// Dimension of the offline trigram embedding backend.
inline constexpr std::size_t kOfflineEmbeddingDim = 256;

/// Model name that selects the offline embedding backend.
inline constexpr const char* kOfflineEmbeddingModel = "offline-trigram";

/// Hashed character-trigram frequency vector over the lowercased text,
/// dimension 256, L2-normalized (all-zero for empty input).
EmbeddingVector offline_trigram_embedding(std::string_view text);

/// One recorded request/response pair, keyed by the canonical request hash.
struct CassetteEntry {
    std::string key;
    nlohmann::json request;
    nlohmann::json response; // string for chat, array of arrays for embeddings
};

/// A persisted set of recorded LLM exchanges for deterministic replay.
class Cassette {
public:
    static Cassette load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    void put(CassetteEntry entry);
    const CassetteEntry* find(const std::string& key) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, CassetteEntry> entries_;
};

enum class LlmMode { Live, Record, Replay };

LlmMode parse_llm_mode(std::string_view text);

struct GatewayConfig {
    LlmMode mode = LlmMode::Replay;
    std::string provider_url;                        // e.g. https://api.openai.com
    std::string model = "gpt-4o";
    std::string embedding_model = kOfflineEmbeddingModel;
    std::string cassette_path;
    std::string api_key_env = "ARCHTRACE_API_KEY";
    double temperature = 0.0;
    long seed = 0;
};

/// Provider-agnostic chat + embedding front end.
///
/// live:   forward to the provider.
/// record: forward, then append the exchange to the cassette file.
/// replay: resolve from the cassette only; a miss is an error and no
///         network I/O ever happens.
class LlmGateway {
public:
    using ChatTransport = std::function<std::string(const ChatRequest&)>;
    using EmbedTransport = std::function<std::vector<EmbeddingVector>(const EmbeddingRequest&)>;

    explicit LlmGateway(GatewayConfig config);
    LlmGateway(GatewayConfig config, ChatTransport chat_transport, EmbedTransport embed_transport);

    std::string chat(const ChatRequest& request);

    /// Convenience: request built from config defaults (model, temperature, seed).
    std::string chat(std::vector<ChatMessage> messages);

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts);

    const GatewayConfig& config() const { return config_; }
    const Cassette& cassette() const { return cassette_; }

private:
    void record_entry(CassetteEntry entry);

    GatewayConfig config_;
    ChatTransport chat_transport_;
    EmbedTransport embed_transport_;
    Cassette cassette_;
    std::mutex record_mutex_;
};

} // namespace archtrace
