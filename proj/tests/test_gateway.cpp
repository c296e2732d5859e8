#include "archtrace/gateway.hpp"

#include "archtrace/io.hpp"
#include "archtrace/similarity.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>

using namespace archtrace;
using testsupport::TempDir;

namespace {

ChatRequest simple_request(const std::string& content) {
    ChatRequest request;
    request.model = "gpt-4o";
    request.messages = {user_message(content)};
    return request;
}

// Independent character-trigram multiset for the embedding ordering oracle.
std::multiset<std::string> trigrams(std::string_view text) {
    const std::string lower = to_lower(text);
    std::multiset<std::string> grams;
    for (std::size_t i = 0; i + 3 <= lower.size(); ++i) {
        grams.insert(lower.substr(i, 3));
    }
    return grams;
}

std::size_t overlap(const std::multiset<std::string>& a, const std::multiset<std::string>& b) {
    std::multiset<std::string> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(common, common.begin()));
    return common.size();
}

} // namespace

TEST_SUITE("llm gateway") {

TEST_CASE("sha256 matches known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex(std::string(200, 'x')) == sha256_hex(std::string(200, 'x')));
}

TEST_CASE("canonical keys are stable and sensitive") {
    const ChatRequest a = simple_request("hello");
    CHECK(canonical_key(a) == canonical_key(a));
    CHECK(canonical_key(simple_request("hello")) != canonical_key(simple_request("hello!")));
    ChatRequest b = a;
    b.temperature = 0.5;
    CHECK(canonical_key(a) != canonical_key(b));
}

TEST_CASE("canonical keys are stable across processes") {
    // The shipped cassette was written by a different process; recomputing the
    // key from each stored request must reproduce the stored key.
    const Cassette cassette =
        Cassette::load(testsupport::fixtures_dir() / "toy" / "cassette.json");
    REQUIRE(cassette.size() == 4);
    const nlohmann::json doc =
        nlohmann::json::parse(read_file(testsupport::fixtures_dir() / "toy" / "cassette.json"));
    for (const auto& item : doc.at("entries")) {
        ChatRequest request;
        request.model = item.at("request").at("model").get<std::string>();
        request.temperature = item.at("request").at("temperature").get<double>();
        request.seed = item.at("request").at("seed").get<long>();
        for (const auto& message : item.at("request").at("messages")) {
            Role role = Role::User;
            if (message.at("role") == "assistant") {
                role = Role::Assistant;
            } else if (message.at("role") == "system") {
                role = Role::System;
            }
            request.messages.push_back(ChatMessage{role, message.at("content")});
        }
        CHECK(canonical_key(request) == item.at("key").get<std::string>());
    }
}

TEST_CASE("replay returns the stored response verbatim") {
    TempDir dir;
    const auto cassette_path = dir.file("c.json").string();
    {
        auto recorder = testsupport::scripted_gateway(
            [](const ChatRequest&) { return std::string("stored response"); },
            LlmMode::Record, cassette_path);
        CHECK(recorder.chat(simple_request("q")) == "stored response");
    }
    GatewayConfig config;
    config.mode = LlmMode::Replay;
    config.cassette_path = cassette_path;
    LlmGateway replayer(config, nullptr, nullptr);
    CHECK(replayer.chat(simple_request("q")) == "stored response");
}

TEST_CASE("replay miss raises an error naming the prompt") {
    GatewayConfig config;
    config.mode = LlmMode::Replay;
    LlmGateway gateway(std::move(config), nullptr, nullptr);
    try {
        gateway.chat(simple_request("which components exist?"));
        FAIL("expected CassetteMissError");
    } catch (const CassetteMissError& e) {
        CHECK(std::string(e.what()).find("which components exist?") != std::string::npos);
    }
}

TEST_CASE("record then replay round-trips byte-identically") {
    TempDir dir;
    const auto cassette_path = dir.file("c.json").string();
    const std::string payload = "line1\nline2 with \"quotes\" and \xC3\xA9";
    {
        auto recorder = testsupport::scripted_gateway(
            [&](const ChatRequest&) { return payload; }, LlmMode::Record, cassette_path);
        recorder.chat(simple_request("q"));
    }
    GatewayConfig config;
    config.mode = LlmMode::Replay;
    config.cassette_path = cassette_path;
    LlmGateway replayer(config, nullptr, nullptr);
    CHECK(replayer.chat(simple_request("q")) == payload);
}

TEST_CASE("replay without a cassette file fails early") {
    GatewayConfig config;
    config.mode = LlmMode::Replay;
    config.cassette_path = "/nonexistent/cassette.json";
    CHECK_THROWS_AS(LlmGateway(std::move(config), nullptr, nullptr), IoError);
}

TEST_CASE("cassette files carry a version header") {
    TempDir dir;
    testsupport::write_text(dir.file("bad.json"), "{\"version\": 9, \"entries\": []}");
    CHECK_THROWS_AS(Cassette::load(dir.file("bad.json")), FormatError);

    Cassette cassette;
    cassette.put(CassetteEntry{"k", nlohmann::json{{"kind", "chat"}}, "r"});
    cassette.save(dir.file("ok.json"));
    const auto doc = nlohmann::json::parse(read_file(dir.file("ok.json")));
    CHECK(doc.at("version") == 1);
    CHECK(Cassette::load(dir.file("ok.json")).size() == 1);
}

TEST_CASE("offline embeddings are deterministic unit vectors") {
    auto gateway = testsupport::embedding_only_gateway();
    const auto a = gateway.embed({"Database"});
    const auto b = gateway.embed({"Database"});
    CHECK(a == b);
    REQUIRE(a[0].values.size() == kOfflineEmbeddingDim);
    double norm = 0.0;
    for (double v : a[0].values) {
        norm += v * v;
    }
    CHECK(std::abs(norm - 1.0) < 1e-9);
}

TEST_CASE("offline embedding cosine follows trigram overlap") {
    auto gateway = testsupport::embedding_only_gateway();
    const auto vecs = gateway.embed({"Database", "DataBase", "Router"});
    const double same = cosine_similarity(vecs[0].values, vecs[1].values);
    const double different = cosine_similarity(vecs[0].values, vecs[2].values);

    const auto g_db = trigrams("Database");
    CHECK(overlap(g_db, trigrams("DataBase")) == g_db.size()); // identical after lowering
    CHECK(overlap(g_db, trigrams("Router")) == 0);
    CHECK(same > different);
    CHECK(same == doctest::Approx(1.0));
}

TEST_CASE("embed preserves order and rejects empty input") {
    auto gateway = testsupport::embedding_only_gateway();
    const auto vecs = gateway.embed({"alpha", "beta"});
    CHECK(vecs[0] == offline_trigram_embedding("alpha"));
    CHECK(vecs[1] == offline_trigram_embedding("beta"));
    CHECK_THROWS_AS(gateway.embed({}), PreconditionError);
}

} // TEST_SUITE
