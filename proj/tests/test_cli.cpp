#include "archtrace/cli.hpp"

#include "archtrace/config.hpp"
#include "archtrace/exarch.hpp"
#include "archtrace/io.hpp"
#include "archtrace/scan.hpp"
#include "support.hpp"

#include <doctest.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace archtrace;
using testsupport::TempDir;
using testsupport::write_text;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"archtrace"};
    for (const auto& arg : args) {
        argv.push_back(arg.c_str());
    }
    return archtrace::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string toy(const char* relative) {
    return (testsupport::fixtures_dir() / "toy" / relative).string();
}

} // namespace

TEST_SUITE("config and cli") {

TEST_CASE("config files parse key=value lines with comments") {
    TempDir dir;
    write_text(dir.file("a.config"), "# comment\nthreshold=0.5\n\nmodel = gpt-4o \n");
    const ConfigMap config = load_config(dir.file("a.config"));
    CHECK(config.get("threshold") == "0.5");
    CHECK(config.get("model") == "gpt-4o");
    CHECK_FALSE(config.get("missing").has_value());
}

TEST_CASE("an unparseable config line reports its line number") {
    TempDir dir;
    write_text(dir.file("bad.config"), "threshold=0.5\nbroken line\n");
    try {
        load_config(dir.file("bad.config"));
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("split_list trims comma-separated items") {
    CHECK(split_list(".java, .kt ,") == std::vector<std::string>{".java", ".kt"});
    CHECK(split_list("").empty());
}

TEST_CASE("unknown config keys warn but do not fail") {
    TempDir dir;
    write_text(dir.file("odd.config"), "future-key=1\n");
    write_text(dir.file("links.csv"), "left,right\n1,a\n");
    const int code = run_cli({"--config", dir.file("odd.config").string(), "eval", "--found",
                              dir.file("links.csv").string(), "--gold",
                              dir.file("links.csv").string()});
    CHECK(code == 0);
}

TEST_CASE("config values override defaults") {
    TempDir dir;
    // Default extensions are .java; the config narrows the scan to .txt.
    write_text(dir.file("scan.config"), "extensions=.txt\n");
    const int code = run_cli({"--config", dir.file("scan.config").string(), "scan",
                              toy("code"), "--out", dir.file("summary.txt").string()});
    CHECK(code == 0);
    CHECK(read_file(dir.file("summary.txt")).find("files: 0") != std::string::npos);
}

TEST_CASE("flags override config values") {
    TempDir dir;
    write_text(dir.file("scan.config"), "extensions=.txt\n");
    const int code = run_cli({"--config", dir.file("scan.config").string(), "scan",
                              toy("code"), "--extensions", ".java", "--out",
                              dir.file("summary.txt").string()});
    CHECK(code == 0);
    CHECK(read_file(dir.file("summary.txt")).find("files: 4") != std::string::npos);
}

TEST_CASE("eval on identical files reports perfect metrics and exit 0") {
    TempDir dir;
    write_text(dir.file("links.csv"), "left,right\n1,a\n2,b\n");
    const std::string out = dir.file("report.json").string();
    const int code = run_cli({"eval", "--found", dir.file("links.csv").string(), "--gold",
                              dir.file("links.csv").string(), "--out", out});
    CHECK(code == 0);
    const auto report = nlohmann::json::parse(read_file(out));
    CHECK(report.at("projects").at(0).at("precision") == 1.0);
    CHECK(report.at("projects").at(0).at("recall") == 1.0);
    CHECK(report.at("projects").at(0).at("f1") == 1.0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"no-such-command"}) == 2);
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"eval"}) == 2); // missing required options
}

TEST_CASE("pipeline failures exit with 1 and name the stage") {
    TempDir dir;
    const int code = run_cli({"eval", "--found", dir.file("absent.csv").string(), "--gold",
                              dir.file("absent.csv").string()});
    CHECK(code == 1);
}

TEST_CASE("scan emits a package summary") {
    TempDir dir;
    const int code =
        run_cli({"scan", toy("code"), "--out", dir.file("summary.txt").string()});
    CHECK(code == 0);
    const std::string summary = read_file(dir.file("summary.txt"));
    CHECK(summary.find("files: 4") != std::string::npos);
    CHECK(summary.find("packages: 2") != std::string::npos);
    CHECK(summary.find("gui") != std::string::npos);
    CHECK(summary.find("logic") != std::string::npos);
}

TEST_CASE("codelink links the toy components to their directories") {
    TempDir dir;
    write_text(dir.file("sam.csv"), "id,name\nx-0,Gui\nx-1,Logic\n");
    const std::string out = dir.file("sam-code.csv").string();
    const int code = run_cli({"codelink", "--sam", dir.file("sam.csv").string(), "--root",
                              toy("code"), "--out", out});
    CHECK(code == 0);
    CHECK(read_file(out) == read_file(toy("gold/sam-code.csv")));
}

TEST_CASE("artemis subcommand replays the toy cassette") {
    TempDir dir;
    write_text(dir.file("sam.csv"), "id,name\nx-0,Gui\nx-1,Logic\n");
    const std::string out = dir.file("sad-sam.csv").string();
    const int code = run_cli({"--llm-mode", "replay", "--cassette", toy("cassette.json"),
                              "artemis", "--sad", toy("sad.txt"), "--sam",
                              dir.file("sam.csv").string(), "--out", out});
    CHECK(code == 0);
    CHECK(read_file(out) == read_file(toy("gold/sad-sam.csv")));
}

TEST_CASE("extract-sam in replay mode writes the extracted model") {
    TempDir dir;
    const std::string out = dir.file("sam.csv").string();
    const int code = run_cli({"--llm-mode", "replay", "--cassette", toy("cassette.json"),
                              "extract-sam", "--mode", "doc", "--sad", toy("sad.txt"),
                              "--out", out});
    CHECK(code == 0);
    CHECK(read_file(out) == "id,name\nx-0,Gui\nx-1,Logic\n");
}

TEST_CASE("trace produces the full output family deterministically") {
    TempDir dir;
    const std::string out = dir.file("sad-code.csv").string();
    const std::vector<std::string> args = {
        "--llm-mode", "replay",    "--cassette", toy("cassette.json"),
        "trace",      "--sad",     toy("sad.txt"), "--root", toy("code"),
        "--out",      out};
    REQUIRE(run_cli(args) == 0);
    const std::string first = read_file(out);
    const std::string first_sam = read_file(dir.file("sad-code.sam.csv"));
    REQUIRE(run_cli(args) == 0);
    CHECK(read_file(out) == first);
    CHECK(read_file(dir.file("sad-code.sam.csv")) == first_sam);
    CHECK(read_file(dir.file("sad-code.sam-code.csv")) == read_file(toy("gold/sam-code.csv")));
    CHECK(read_file(dir.file("sad-code.sad-sam.csv")) == read_file(toy("gold/sad-sam.csv")));
}

TEST_CASE("extract-sam in both mode merges doc and code names by similarity") {
    TempDir dir;
    // A miniature project: documentation plus a two-package source tree.
    write_text(dir.file("proj/sad.txt"), "The Store keeps items.\nThe Billing adds prices.\n");
    write_text(dir.file("proj/src/store/Store.java"), "package store;\nclass Store {}\n");
    write_text(dir.file("proj/src/billing/Billing.java"), "package billing;\nclass Billing {}\n");

    // Record the two extraction conversations through the library so the
    // cassette keys match what the CLI will request in replay mode.
    const std::string cassette = dir.file("cassette.json").string();
    {
        auto gateway = testsupport::scripted_gateway(
            [](const archtrace::ChatRequest& request) {
                const std::string& last = request.messages.back().content;
                if (request.messages.size() == 1 &&
                    last.find("software architecture documentation") != std::string::npos) {
                    return std::string("The doc names Store and Billing.");
                }
                if (request.messages.size() == 1) {
                    return std::string("The packages suggest Store and Shipping.");
                }
                const std::string& first = request.messages.front().content;
                if (first.find("software architecture documentation") != std::string::npos) {
                    return std::string("- Store\n- Billing");
                }
                return std::string("- Stor\n- Shipping");
            },
            LlmMode::Record, cassette);
        const SadDocument sad = load_sad(dir.file("proj/sad.txt"));
        extract_names_from_sad(sad, gateway);
        const CodeModel model = scan_source_tree(dir.file("proj/src"));
        extract_names_from_code(render_feature_text(model.packages), gateway);
    }

    const std::string out = dir.file("sam.csv").string();
    const int code = run_cli({"--llm-mode", "replay", "--cassette", cassette, "extract-sam",
                              "--mode", "both", "--aggregation", "similarity", "--sad",
                              dir.file("proj/sad.txt").string(), "--root",
                              dir.file("proj/src").string(), "--out", out});
    CHECK(code == 0);
    // "Stor" merges into "Store" (similarity .8 > .5); "Shipping" survives.
    CHECK(read_file(out) == "id,name\nx-0,Store\nx-1,Billing\nx-2,Shipping\n");
}

TEST_CASE("significance prints the exact p for five improvements") {
    TempDir dir;
    write_text(dir.file("ours.csv"),
               "project,f1\nMS,0.50\nTS,0.78\nTM,0.80\nBBB,0.68\nJR,0.94\n");
    write_text(dir.file("base.csv"),
               "project,f1\nMS,0.13\nTS,0.27\nTM,0.11\nBBB,0.10\nJR,0.49\n");
    const std::string out = dir.file("sig.json").string();

    std::ostringstream captured;
    std::streambuf* old_buf = std::cout.rdbuf(captured.rdbuf());
    const int code = run_cli({"significance", "--ours", dir.file("ours.csv").string(),
                              "--baseline", dir.file("base.csv").string(), "--out", out});
    std::cout.rdbuf(old_buf);

    CHECK(code == 0);
    CHECK(captured.str().find("p=.031") != std::string::npos);
    const auto doc = nlohmann::json::parse(read_file(out));
    CHECK(doc.at("p") == 0.03125);
    CHECK(doc.at("exact") == true);
    CHECK(doc.at("significant") == true);
}

TEST_CASE("artemis can dump the recognized entities for inspection") {
    TempDir dir;
    write_text(dir.file("sam.csv"), "id,name\nx-0,Gui\nx-1,Logic\n");
    const std::string entities_out = dir.file("entities.json").string();
    const int code = run_cli({"--llm-mode", "replay", "--cassette", toy("cassette.json"),
                              "artemis", "--sad", toy("sad.txt"), "--sam",
                              dir.file("sam.csv").string(), "--out",
                              dir.file("links.csv").string(), "--entities-out", entities_out});
    CHECK(code == 0);
    const auto doc = nlohmann::json::parse(read_file(entities_out));
    REQUIRE(doc.size() == 2);
    CHECK(doc.at(0).at("name") == "Gui");
    CHECK(doc.at(0).at("resolvedSentences") == nlohmann::json({2, 3, 5, 6}));
    CHECK(doc.at(1).at("name") == "Logic");
    CHECK(doc.at(1).at("resolvedSentences") == nlohmann::json({3, 4, 6}));
}

} // TEST_SUITE
