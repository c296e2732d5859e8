#include "archtrace/gateway.hpp"

#include "archtrace/io.hpp"
#include "archtrace/similarity.hpp"

#include <httplib.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>

namespace archtrace {

const char* to_string(Role role) {
    switch (role) {
    case Role::System:
        return "system";
    case Role::User:
        return "user";
    case Role::Assistant:
        return "assistant";
    }
    return "user";
}

LlmMode parse_llm_mode(std::string_view text) {
    if (text == "live") {
        return LlmMode::Live;
    }
    if (text == "record") {
        return LlmMode::Record;
    }
    if (text == "replay") {
        return LlmMode::Replay;
    }
    throw FormatError("unknown llm mode: " + std::string(text));
}

// ---------------------------------------------------------------------------
// SHA-256 (FIPS 180-4), self-contained.
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::uint32_t, 64> kSha256K = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
    0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
    0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
    0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
    0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
    0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
    0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
    0xc67178f2};

inline std::uint32_t rotr(std::uint32_t x, int n) {
    return (x >> n) | (x << (32 - n));
}

struct Sha256State {
    std::array<std::uint32_t, 8> h = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                                      0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

    void process(const unsigned char* block) {
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i) {
            w[i] = (std::uint32_t(block[i * 4]) << 24) | (std::uint32_t(block[i * 4 + 1]) << 16) |
                   (std::uint32_t(block[i * 4 + 2]) << 8) | std::uint32_t(block[i * 4 + 3]);
        }
        for (int i = 16; i < 64; ++i) {
            const std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            const std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        auto [a, b, c, d, e, f, g, hh] = h;
        for (int i = 0; i < 64; ++i) {
            const std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            const std::uint32_t ch = (e & f) ^ (~e & g);
            const std::uint32_t temp1 = hh + s1 + ch + kSha256K[i] + w[i];
            const std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            const std::uint32_t temp2 = s0 + maj;
            hh = g;
            g = f;
            f = e;
            e = d + temp1;
            d = c;
            c = b;
            b = a;
            a = temp1 + temp2;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
        h[5] += f;
        h[6] += g;
        h[7] += hh;
    }
};

} // namespace

std::string sha256_hex(std::string_view data) {
    Sha256State state;
    const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
    std::size_t remaining = data.size();
    while (remaining >= 64) {
        state.process(bytes);
        bytes += 64;
        remaining -= 64;
    }
    unsigned char tail[128] = {};
    std::memcpy(tail, bytes, remaining);
    tail[remaining] = 0x80;
    const std::size_t tail_len = remaining + 9 <= 64 ? 64 : 128;
    const std::uint64_t bit_len = std::uint64_t(data.size()) * 8;
    for (int i = 0; i < 8; ++i) {
        tail[tail_len - 1 - i] = static_cast<unsigned char>((bit_len >> (8 * i)) & 0xff);
    }
    state.process(tail);
    if (tail_len == 128) {
        state.process(tail + 64);
    }

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint32_t word : state.h) {
        for (int shift = 28; shift >= 0; shift -= 4) {
            out.push_back(hex[(word >> shift) & 0xf]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical request serialization and keys
// ---------------------------------------------------------------------------

namespace {

nlohmann::json to_json(const ChatRequest& request) {
    nlohmann::json messages = nlohmann::json::array();
    for (const auto& message : request.messages) {
        messages.push_back({{"role", to_string(message.role)}, {"content", message.content}});
    }
    return nlohmann::json{{"kind", "chat"},
                          {"model", request.model},
                          {"temperature", request.temperature},
                          {"seed", request.seed},
                          {"messages", std::move(messages)}};
}

nlohmann::json to_json(const EmbeddingRequest& request) {
    return nlohmann::json{{"kind", "embed"}, {"model", request.model}, {"texts", request.texts}};
}

std::string prompt_head(const ChatRequest& request) {
    for (auto it = request.messages.rbegin(); it != request.messages.rend(); ++it) {
        if (it->role == Role::User) {
            std::string head(std::string_view(it->content).substr(0, 80));
            if (it->content.size() > 80) {
                head += "...";
            }
            return head;
        }
    }
    return "<no user message>";
}

} // namespace

std::string canonical_key(const ChatRequest& request) {
    return sha256_hex(to_json(request).dump());
}

std::string canonical_key(const EmbeddingRequest& request) {
    return sha256_hex(to_json(request).dump());
}

// ---------------------------------------------------------------------------
// Offline embedding backend
// ---------------------------------------------------------------------------

namespace {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

} // namespace

EmbeddingVector offline_trigram_embedding(std::string_view text) {
    EmbeddingVector vec;
    vec.values.assign(kOfflineEmbeddingDim, 0.0);
    const std::string lower = to_lower(text);
    if (lower.size() >= 3) {
        for (std::size_t i = 0; i + 3 <= lower.size(); ++i) {
            vec.values[fnv1a64(std::string_view(lower).substr(i, 3)) % kOfflineEmbeddingDim] += 1.0;
        }
    } else if (!lower.empty()) {
        vec.values[fnv1a64(lower) % kOfflineEmbeddingDim] += 1.0;
    }
    double norm = 0.0;
    for (double v : vec.values) {
        norm += v * v;
    }
    if (norm > 0.0) {
        norm = std::sqrt(norm);
        for (double& v : vec.values) {
            v /= norm;
        }
    }
    return vec;
}

// ---------------------------------------------------------------------------
// Cassette persistence
// ---------------------------------------------------------------------------

Cassette Cassette::load(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("cassette " + path.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || doc.value("version", 0) != 1) {
        throw FormatError("cassette " + path.string() + " has unsupported version");
    }
    Cassette cassette;
    for (const auto& item : doc.value("entries", nlohmann::json::array())) {
        CassetteEntry entry;
        entry.key = item.at("key").get<std::string>();
        entry.request = item.at("request");
        entry.response = item.at("response");
        cassette.put(std::move(entry));
    }
    return cassette;
}

void Cassette::save(const std::filesystem::path& path) const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, entry] : entries_) {
        entries.push_back(
            {{"key", entry.key}, {"request", entry.request}, {"response", entry.response}});
    }
    const nlohmann::json doc{{"version", 1}, {"entries", std::move(entries)}};
    write_file(path, doc.dump(2) + "\n");
}

void Cassette::put(CassetteEntry entry) {
    entries_[entry.key] = std::move(entry);
}

const CassetteEntry* Cassette::find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// HTTP transports (live/record modes only)
// ---------------------------------------------------------------------------

namespace {

httplib::Headers auth_headers(const GatewayConfig& config) {
    httplib::Headers headers;
    if (const char* key = std::getenv(config.api_key_env.c_str()); key != nullptr && *key != '\0') {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    return headers;
}

nlohmann::json post_json(const GatewayConfig& config, const std::string& endpoint,
                         const nlohmann::json& body) {
    if (config.provider_url.empty()) {
        throw ProviderError("no provider-url configured for live LLM access");
    }
    httplib::Client client(config.provider_url);
    client.set_read_timeout(120, 0);
    const auto result = client.Post(endpoint, auth_headers(config), body.dump(),
                                    "application/json");
    if (!result) {
        throw ProviderError("request to " + config.provider_url + endpoint +
                            " failed: " + httplib::to_string(result.error()));
    }
    if (result->status < 200 || result->status >= 300) {
        throw ProviderError("provider returned status " + std::to_string(result->status) + ": " +
                            result->body);
    }
    try {
        return nlohmann::json::parse(result->body);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProviderError(std::string("provider returned invalid JSON: ") + e.what());
    }
}

LlmGateway::ChatTransport http_chat_transport(const GatewayConfig& config) {
    return [config](const ChatRequest& request) {
        nlohmann::json messages = nlohmann::json::array();
        for (const auto& message : request.messages) {
            messages.push_back(
                {{"role", to_string(message.role)}, {"content", message.content}});
        }
        const nlohmann::json body{{"model", request.model},
                                  {"temperature", request.temperature},
                                  {"seed", request.seed},
                                  {"messages", std::move(messages)}};
        const auto response = post_json(config, "/v1/chat/completions", body);
        try {
            return response.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            throw ProviderError("chat response missing choices[0].message.content");
        }
    };
}

LlmGateway::EmbedTransport http_embed_transport(const GatewayConfig& config) {
    return [config](const EmbeddingRequest& request) {
        const nlohmann::json body{{"model", request.model}, {"input", request.texts}};
        const auto response = post_json(config, "/v1/embeddings", body);
        std::vector<EmbeddingVector> vectors;
        try {
            for (const auto& item : response.at("data")) {
                EmbeddingVector vec;
                vec.values = item.at("embedding").get<std::vector<double>>();
                vectors.push_back(std::move(vec));
            }
        } catch (const nlohmann::json::exception&) {
            throw ProviderError("embedding response missing data[*].embedding");
        }
        if (vectors.size() != request.texts.size()) {
            throw ProviderError("embedding response count does not match input count");
        }
        return vectors;
    };
}

} // namespace

// ---------------------------------------------------------------------------
// Gateway
// ---------------------------------------------------------------------------

LlmGateway::LlmGateway(GatewayConfig config)
    : LlmGateway(std::move(config), nullptr, nullptr) {
    chat_transport_ = http_chat_transport(config_);
    embed_transport_ = http_embed_transport(config_);
}

LlmGateway::LlmGateway(GatewayConfig config, ChatTransport chat_transport,
                       EmbedTransport embed_transport)
    : config_(std::move(config)), chat_transport_(std::move(chat_transport)),
      embed_transport_(std::move(embed_transport)) {
    if (!config_.cassette_path.empty() && std::filesystem::exists(config_.cassette_path)) {
        cassette_ = Cassette::load(config_.cassette_path);
    } else if (config_.mode == LlmMode::Replay && !config_.cassette_path.empty()) {
        throw IoError("replay mode needs an existing cassette: " + config_.cassette_path);
    }
}

void LlmGateway::record_entry(CassetteEntry entry) {
    const std::lock_guard<std::mutex> lock(record_mutex_);
    cassette_.put(std::move(entry));
    if (!config_.cassette_path.empty()) {
        cassette_.save(config_.cassette_path);
    }
}

std::string LlmGateway::chat(const ChatRequest& request) {
    if (request.messages.empty()) {
        throw PreconditionError("chat request has no messages");
    }
    if (request.temperature < 0.0) {
        throw PreconditionError("chat temperature must be >= 0");
    }
    const std::string key = canonical_key(request);
    if (config_.mode == LlmMode::Replay) {
        const CassetteEntry* entry = cassette_.find(key);
        if (entry == nullptr) {
            throw CassetteMissError("cassette miss for prompt: \"" + prompt_head(request) + "\"");
        }
        return entry->response.get<std::string>();
    }
    const std::string content = chat_transport_(request);
    if (config_.mode == LlmMode::Record) {
        record_entry(CassetteEntry{key, to_json(request), content});
    }
    return content;
}

std::string LlmGateway::chat(std::vector<ChatMessage> messages) {
    ChatRequest request;
    request.model = config_.model;
    request.temperature = config_.temperature;
    request.seed = config_.seed;
    request.messages = std::move(messages);
    return chat(request);
}

std::vector<EmbeddingVector> LlmGateway::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) {
        throw PreconditionError("embed needs at least one text");
    }
    if (config_.embedding_model == kOfflineEmbeddingModel) {
        std::vector<EmbeddingVector> vectors;
        vectors.reserve(texts.size());
        for (const auto& text : texts) {
            vectors.push_back(offline_trigram_embedding(text));
        }
        return vectors;
    }
    EmbeddingRequest request{config_.embedding_model, texts};
    const std::string key = canonical_key(request);
    if (config_.mode == LlmMode::Replay) {
        const CassetteEntry* entry = cassette_.find(key);
        if (entry == nullptr) {
            throw CassetteMissError("cassette miss for embedding batch of " +
                                    std::to_string(texts.size()) + " texts");
        }
        std::vector<EmbeddingVector> vectors;
        for (const auto& values : entry->response) {
            vectors.push_back(EmbeddingVector{values.get<std::vector<double>>()});
        }
        return vectors;
    }
    auto vectors = embed_transport_(request);
    if (config_.mode == LlmMode::Record) {
        nlohmann::json response = nlohmann::json::array();
        for (const auto& vec : vectors) {
            response.push_back(vec.values);
        }
        record_entry(CassetteEntry{key, to_json(request), std::move(response)});
    }
    return vectors;
}

} // namespace archtrace
