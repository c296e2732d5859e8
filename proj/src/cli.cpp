#include "archtrace/cli.hpp"

#include "archtrace/artemis.hpp"
#include "archtrace/codelink.hpp"
#include "archtrace/compose.hpp"
#include "archtrace/config.hpp"
#include "archtrace/exarch.hpp"
#include "archtrace/io.hpp"
#include "archtrace/metrics.hpp"
#include "archtrace/report.hpp"
#include "archtrace/scan.hpp"
#include "archtrace/wilcoxon.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <set>

namespace fs = std::filesystem;

namespace archtrace::cli {

namespace {

const std::set<std::string> kKnownConfigKeys = {
    "llm-mode",       "cassette",       "cassette-path",  "provider-url",   "model",
    "embedding-model", "temperature",   "seed",           "threshold",
    "casing",         "aggregation",    "mode",           "link-threshold",
    "dominance-band", "jw-threshold",   "lev-threshold",  "cosine-threshold",
    "extensions",     "source-roots",   "exclude-globs",  "exclude-test-code",
    "project",        "kind",           "out"};

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed != value.size()) {
            throw std::invalid_argument(value);
        }
        return parsed;
    } catch (const std::exception&) {
        throw FormatError("config value for " + key + " is not a number: " + value);
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const long parsed = std::stol(value, &consumed);
        if (consumed != value.size()) {
            throw std::invalid_argument(value);
        }
        return parsed;
    } catch (const std::exception&) {
        throw FormatError("config value for " + key + " is not an integer: " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw FormatError("config value for " + key + " is not a boolean: " + value);
}

// Flags win over config; config wins over the built-in defaults.
struct SettingMerger {
    const ConfigMap& config;

    void text(const CLI::Option* opt, const char* key, std::string& target) const {
        if (opt != nullptr && opt->count() > 0) {
            return;
        }
        if (auto v = config.get(key)) {
            target = *v;
        }
    }
    void number(const CLI::Option* opt, const char* key, double& target) const {
        if (opt != nullptr && opt->count() > 0) {
            return;
        }
        if (auto v = config.get(key)) {
            target = parse_double(key, *v);
        }
    }
    void integer(const CLI::Option* opt, const char* key, long& target) const {
        if (opt != nullptr && opt->count() > 0) {
            return;
        }
        if (auto v = config.get(key)) {
            target = parse_long(key, *v);
        }
    }
    void boolean(const CLI::Option* opt, const char* key, bool& target) const {
        if (opt != nullptr && opt->count() > 0) {
            return;
        }
        if (auto v = config.get(key)) {
            target = parse_bool(key, *v);
        }
    }
};

struct LlmOptions {
    std::string mode = "replay";
    std::string cassette;
    std::string provider_url;
    std::string model = "gpt-4o";
    std::string embedding_model = kOfflineEmbeddingModel;
    double temperature = 0.0;
    long seed = 0;
};

LlmGateway make_gateway(const LlmOptions& options) {
    GatewayConfig config;
    config.mode = parse_llm_mode(options.mode);
    config.cassette_path = options.cassette;
    config.provider_url = options.provider_url;
    config.model = options.model;
    config.embedding_model = options.embedding_model;
    config.temperature = options.temperature;
    config.seed = options.seed;
    return LlmGateway(std::move(config));
}

fs::path sibling_output(const fs::path& out, const std::string& tag) {
    fs::path sibling = out.parent_path();
    sibling /= out.stem().string() + "." + tag + ".csv";
    return sibling;
}

LinkKind parse_kind(const std::string& text) {
    if (text == "sad-sam") {
        return LinkKind::SadSam;
    }
    if (text == "sam-code") {
        return LinkKind::SamCode;
    }
    if (text == "sad-code") {
        return LinkKind::SadCode;
    }
    throw FormatError("unknown link kind: " + text);
}

std::vector<std::pair<std::string, double>> load_f1_csv(const fs::path& path) {
    const std::string content = read_file(path);
    std::vector<std::pair<std::string, double>> rows;
    std::size_t start = 0;
    std::size_t line_number = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos) {
            end = content.size();
        }
        ++line_number;
        std::string line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_number == 1) {
            if (line != "project,f1") {
                throw FormatError("expected header \"project,f1\" in " + path.string());
            }
        } else if (!line.empty()) {
            auto fields = csv::split_record(line);
            if (fields.size() != 2) {
                throw FormatError("expected 2 fields on line " + std::to_string(line_number) +
                                  " of " + path.string());
            }
            rows.emplace_back(fields[0], parse_double("f1", fields[1]));
        }
        if (end == content.size()) {
            break;
        }
        start = end + 1;
    }
    return rows;
}

struct ScanOptions {
    std::string root;
    std::string extensions;
    std::string source_roots;
    std::string exclude_globs;
    bool exclude_test_code = false;
};

ScanConfig make_scan_config(const ScanOptions& options) {
    ScanConfig config;
    if (!options.extensions.empty()) {
        config.extensions = split_list(options.extensions);
    }
    if (!options.source_roots.empty()) {
        config.source_roots = split_list(options.source_roots);
    }
    if (!options.exclude_globs.empty()) {
        config.exclude_globs = split_list(options.exclude_globs);
    }
    config.exclude_test_code = options.exclude_test_code;
    return config;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Recover documentation-to-code trace links via extracted architecture models"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "Flat key=value config file");

    LlmOptions llm;
    auto* opt_llm_mode = app.add_option("--llm-mode", llm.mode, "live, record, or replay");
    auto* opt_cassette = app.add_option("--cassette", llm.cassette, "Cassette file for record/replay");
    auto* opt_provider = app.add_option("--provider-url", llm.provider_url, "Chat provider base URL");
    auto* opt_model = app.add_option("--model", llm.model, "Chat model id");
    auto* opt_embedding_model =
        app.add_option("--embedding-model", llm.embedding_model, "Embedding model id");

    std::string out_path;
    auto* opt_out = app.add_option("--out", out_path, "Primary output file");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Scan a source tree and list non-empty packages");
    scan_cmd->fallthrough();
    ScanOptions scan_options;
    scan_cmd->add_option("root", scan_options.root, "Source tree root")->required();
    auto* opt_scan_ext = scan_cmd->add_option("--extensions", scan_options.extensions,
                                              "Comma-separated list, default .java");
    auto* opt_scan_roots =
        scan_cmd->add_option("--source-roots", scan_options.source_roots, "Comma-separated roots");
    auto* opt_scan_globs = scan_cmd->add_option("--exclude-globs", scan_options.exclude_globs,
                                                "Comma-separated exclude globs");
    auto* opt_scan_tests = scan_cmd->add_flag("--exclude-test-code", scan_options.exclude_test_code,
                                              "Drop paths containing a /test/ segment");

    // extract-sam
    auto* extract_cmd = app.add_subcommand("extract-sam", "Extract component names into a model");
    extract_cmd->fallthrough();
    std::string extract_mode = "doc";
    std::string aggregation = "similarity";
    double threshold = 0.5;
    std::string casing_text = "strict-camel";
    std::string sad_path;
    std::string project_name;
    ScanOptions extract_scan;
    auto* opt_extract_mode =
        extract_cmd->add_option("--mode", extract_mode, "doc, code, or both (default doc)");
    auto* opt_aggregation = extract_cmd->add_option("--aggregation", aggregation,
                                                    "prompt or similarity (default similarity)");
    auto* opt_threshold =
        extract_cmd->add_option("--threshold", threshold, "Similarity merge threshold");
    auto* opt_casing =
        extract_cmd->add_option("--casing", casing_text, "strict-camel or legacy-space-removal");
    extract_cmd->add_option("--sad", sad_path, "Documentation file (one sentence per line)");
    extract_cmd->add_option("--root", extract_scan.root, "Source tree root");
    auto* opt_project = extract_cmd->add_option("--project", project_name, "Project name");

    // artemis
    auto* artemis_cmd = app.add_subcommand("artemis", "Link documentation sentences to components");
    artemis_cmd->fallthrough();
    std::string artemis_sad;
    std::string artemis_sam;
    std::string artemis_entities_out;
    MatchConfig match_config;
    artemis_cmd->add_option("--sad", artemis_sad, "Documentation file")->required();
    artemis_cmd->add_option("--sam", artemis_sam, "Component CSV (id,name)")->required();
    artemis_cmd->add_option("--entities-out", artemis_entities_out,
                            "Dump recognized entities as JSON");
    auto* opt_jw = artemis_cmd->add_option("--jw-threshold", match_config.jaro_winkler_threshold,
                                           "Jaro-Winkler threshold");
    auto* opt_lev = artemis_cmd->add_option("--lev-threshold", match_config.levenshtein_threshold,
                                            "Levenshtein threshold");
    auto* opt_cos = artemis_cmd->add_option("--cosine-threshold", match_config.cosine_threshold,
                                            "Embedding cosine threshold");

    // codelink
    auto* codelink_cmd = app.add_subcommand("codelink", "Link components to code files");
    codelink_cmd->fallthrough();
    std::string codelink_sam;
    ScanOptions codelink_scan;
    LinkerConfig linker_config;
    codelink_cmd->add_option("--sam", codelink_sam, "Component CSV (id,name)")->required();
    codelink_cmd->add_option("--root", codelink_scan.root, "Source tree root")->required();
    auto* opt_link_threshold = codelink_cmd->add_option(
        "--link-threshold", linker_config.link_threshold, "Minimum confidence");
    auto* opt_dominance = codelink_cmd->add_option("--dominance-band", linker_config.dominance_band,
                                                   "Keep candidates near the file's best");

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "End-to-end documentation-to-code links");
    trace_cmd->fallthrough();
    std::string trace_sad;
    std::string trace_sam;
    std::string trace_mode = "doc";
    std::string trace_aggregation = "similarity";
    double trace_threshold = 0.5;
    std::string trace_casing = "strict-camel";
    ScanOptions trace_scan;
    MatchConfig trace_match;
    LinkerConfig trace_linker;
    trace_cmd->add_option("--sad", trace_sad, "Documentation file")->required();
    trace_cmd->add_option("--root", trace_scan.root, "Source tree root")->required();
    trace_cmd->add_option("--sam", trace_sam, "Existing component CSV (skips extraction)");
    auto* opt_trace_mode = trace_cmd->add_option("--mode", trace_mode, "doc, code, or both");
    auto* opt_trace_aggregation =
        trace_cmd->add_option("--aggregation", trace_aggregation, "prompt or similarity");
    auto* opt_trace_threshold =
        trace_cmd->add_option("--threshold", trace_threshold, "Similarity merge threshold");
    auto* opt_trace_casing =
        trace_cmd->add_option("--casing", trace_casing, "strict-camel or legacy-space-removal");
    auto* opt_trace_jw = trace_cmd->add_option(
        "--jw-threshold", trace_match.jaro_winkler_threshold, "Jaro-Winkler threshold");
    auto* opt_trace_lev = trace_cmd->add_option(
        "--lev-threshold", trace_match.levenshtein_threshold, "Levenshtein threshold");
    auto* opt_trace_cos = trace_cmd->add_option(
        "--cosine-threshold", trace_match.cosine_threshold, "Embedding cosine threshold");
    auto* opt_trace_link_threshold = trace_cmd->add_option(
        "--link-threshold", trace_linker.link_threshold, "Minimum code-link confidence");
    auto* opt_trace_dominance = trace_cmd->add_option(
        "--dominance-band", trace_linker.dominance_band, "Keep candidates near the file's best");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Score found links against a gold standard");
    eval_cmd->fallthrough();
    std::string eval_found;
    std::string eval_gold;
    std::string eval_kind = "sad-code";
    std::string eval_project = "project";
    eval_cmd->add_option("--found", eval_found, "Found links CSV")->required();
    eval_cmd->add_option("--gold", eval_gold, "Gold links CSV")->required();
    auto* opt_eval_kind =
        eval_cmd->add_option("--kind", eval_kind, "sad-sam, sam-code, or sad-code");
    eval_cmd->add_option("--project", eval_project, "Project label for the report");

    // significance
    auto* sig_cmd = app.add_subcommand("significance", "One-sided Wilcoxon signed-rank test");
    sig_cmd->fallthrough();
    std::string sig_ours;
    std::string sig_baseline;
    std::string sig_name = "ours vs baseline";
    sig_cmd->add_option("--ours", sig_ours, "CSV project,f1")->required();
    sig_cmd->add_option("--baseline", sig_baseline, "CSV project,f1")->required();
    sig_cmd->add_option("--name", sig_name, "Comparison label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string stage = "setup";
    try {
        ConfigMap config;
        if (!config_path.empty()) {
            config = load_config(config_path);
            for (const auto& [key, value] : config.values) {
                if (kKnownConfigKeys.count(key) == 0) {
                    std::cerr << "warning: unknown config key \"" << key << "\" ignored\n";
                }
            }
        }
        const SettingMerger merge{config};
        merge.text(opt_llm_mode, "llm-mode", llm.mode);
        merge.text(opt_cassette, "cassette", llm.cassette);
        merge.text(opt_cassette, "cassette-path", llm.cassette); // accepted alias
        merge.text(opt_provider, "provider-url", llm.provider_url);
        merge.text(opt_model, "model", llm.model);
        merge.text(opt_embedding_model, "embedding-model", llm.embedding_model);
        merge.number(nullptr, "temperature", llm.temperature);
        merge.integer(nullptr, "seed", llm.seed);
        merge.text(opt_out, "out", out_path);

        if (scan_cmd->parsed()) {
            stage = "scan";
            merge.text(opt_scan_ext, "extensions", scan_options.extensions);
            merge.text(opt_scan_roots, "source-roots", scan_options.source_roots);
            merge.text(opt_scan_globs, "exclude-globs", scan_options.exclude_globs);
            merge.boolean(opt_scan_tests, "exclude-test-code", scan_options.exclude_test_code);
            const CodeModel model = scan_source_tree(scan_options.root,
                                                     make_scan_config(scan_options));
            std::string summary = "root: " + model.root + "\n";
            summary += "files: " + std::to_string(model.files.size()) + "\n";
            summary += "packages: " + std::to_string(model.packages.size()) + "\n";
            for (const auto& package : model.packages) {
                summary += "  " + package + "\n";
            }
            std::cout << summary;
            if (!out_path.empty()) {
                write_file(out_path, summary);
            }
            return 0;
        }

        if (extract_cmd->parsed()) {
            stage = "extract-sam";
            merge.text(opt_extract_mode, "mode", extract_mode);
            merge.text(opt_aggregation, "aggregation", aggregation);
            merge.number(opt_threshold, "threshold", threshold);
            merge.text(opt_casing, "casing", casing_text);
            merge.text(opt_project, "project", project_name);
            merge.text(nullptr, "extensions", extract_scan.extensions);
            merge.text(nullptr, "source-roots", extract_scan.source_roots);
            merge.text(nullptr, "exclude-globs", extract_scan.exclude_globs);
            merge.boolean(nullptr, "exclude-test-code", extract_scan.exclude_test_code);
            const Casing casing = parse_casing(casing_text);

            LlmGateway gateway = make_gateway(llm);
            ComponentNameList names;
            std::string project = project_name;
            if (extract_mode == "doc" || extract_mode == "both") {
                if (sad_path.empty()) {
                    throw PreconditionError("--sad is required for mode " + extract_mode);
                }
            }
            if (extract_mode == "code" || extract_mode == "both") {
                if (extract_scan.root.empty()) {
                    throw PreconditionError("--root is required for mode " + extract_mode);
                }
            }
            if (extract_mode == "doc") {
                const SadDocument sad = load_sad(sad_path);
                names = extract_names_from_sad(sad, gateway, casing);
                if (project.empty()) {
                    project = sad.project;
                }
            } else if (extract_mode == "code") {
                const CodeModel model =
                    scan_source_tree(extract_scan.root, make_scan_config(extract_scan));
                names = extract_names_from_code(render_feature_text(model.packages), gateway,
                                                casing);
                if (project.empty()) {
                    project = fs::path(extract_scan.root).filename().string();
                }
            } else if (extract_mode == "both") {
                const SadDocument sad = load_sad(sad_path);
                const ComponentNameList doc_names = extract_names_from_sad(sad, gateway, casing);
                const CodeModel model =
                    scan_source_tree(extract_scan.root, make_scan_config(extract_scan));
                const ComponentNameList code_names = extract_names_from_code(
                    render_feature_text(model.packages), gateway, casing);
                if (aggregation == "prompt") {
                    names = aggregate_via_prompt(doc_names.names, code_names.names, gateway,
                                                 casing);
                } else if (aggregation == "similarity") {
                    names = aggregate_via_similarity(doc_names.names, code_names.names,
                                                     AggregationConfig{threshold, casing});
                } else {
                    throw FormatError("unknown aggregation: " + aggregation);
                }
                if (project.empty()) {
                    project = sad.project;
                }
            } else {
                throw FormatError("unknown mode: " + extract_mode);
            }
            const Sam sam = build_simple_sam(names, project.empty() ? "project" : project);
            write_sam(sam, out_path.empty() ? "sam.csv" : out_path);
            return 0;
        }

        if (artemis_cmd->parsed()) {
            stage = "artemis";
            merge.number(opt_jw, "jw-threshold", match_config.jaro_winkler_threshold);
            merge.number(opt_lev, "lev-threshold", match_config.levenshtein_threshold);
            merge.number(opt_cos, "cosine-threshold", match_config.cosine_threshold);
            const SadDocument sad = load_sad(artemis_sad);
            const Sam sam = load_component_list(artemis_sam);
            LlmGateway gateway = make_gateway(llm);
            std::vector<RecognizedEntity> entities;
            const LinkSet links = run_artemis(sad, sam, gateway, match_config, &entities);
            write_links(links, out_path.empty() ? "sad-sam.csv" : out_path);
            if (!artemis_entities_out.empty()) {
                write_file(artemis_entities_out, entities_to_json(entities));
            }
            return 0;
        }

        if (codelink_cmd->parsed()) {
            stage = "codelink";
            merge.number(opt_link_threshold, "link-threshold", linker_config.link_threshold);
            merge.number(opt_dominance, "dominance-band", linker_config.dominance_band);
            merge.text(nullptr, "extensions", codelink_scan.extensions);
            merge.text(nullptr, "source-roots", codelink_scan.source_roots);
            merge.text(nullptr, "exclude-globs", codelink_scan.exclude_globs);
            merge.boolean(nullptr, "exclude-test-code", codelink_scan.exclude_test_code);
            const Sam sam = load_component_list(codelink_sam);
            const CodeModel model =
                scan_source_tree(codelink_scan.root, make_scan_config(codelink_scan));
            const LinkSet links = link_sam_to_code(sam, model, linker_config);
            write_links(links, out_path.empty() ? "sam-code.csv" : out_path);
            return 0;
        }

        if (trace_cmd->parsed()) {
            stage = "trace";
            merge.text(opt_trace_mode, "mode", trace_mode);
            merge.text(opt_trace_aggregation, "aggregation", trace_aggregation);
            merge.number(opt_trace_threshold, "threshold", trace_threshold);
            merge.text(opt_trace_casing, "casing", trace_casing);
            merge.number(opt_trace_jw, "jw-threshold", trace_match.jaro_winkler_threshold);
            merge.number(opt_trace_lev, "lev-threshold", trace_match.levenshtein_threshold);
            merge.number(opt_trace_cos, "cosine-threshold", trace_match.cosine_threshold);
            merge.number(opt_trace_link_threshold, "link-threshold",
                         trace_linker.link_threshold);
            merge.number(opt_trace_dominance, "dominance-band", trace_linker.dominance_band);
            merge.text(nullptr, "extensions", trace_scan.extensions);
            merge.text(nullptr, "source-roots", trace_scan.source_roots);
            merge.text(nullptr, "exclude-globs", trace_scan.exclude_globs);
            merge.boolean(nullptr, "exclude-test-code", trace_scan.exclude_test_code);
            const Casing casing = parse_casing(trace_casing);

            const fs::path out = out_path.empty() ? fs::path("sad-code.csv") : fs::path(out_path);
            const SadDocument sad = load_sad(trace_sad);
            const CodeModel model =
                scan_source_tree(trace_scan.root, make_scan_config(trace_scan));
            LlmGateway gateway = make_gateway(llm);

            stage = "extract-sam";
            Sam sam;
            if (!trace_sam.empty()) {
                sam = load_component_list(trace_sam);
            } else {
                ComponentNameList names;
                if (trace_mode == "doc") {
                    names = extract_names_from_sad(sad, gateway, casing);
                } else if (trace_mode == "code") {
                    names = extract_names_from_code(render_feature_text(model.packages), gateway,
                                                    casing);
                } else if (trace_mode == "both") {
                    const ComponentNameList doc_names =
                        extract_names_from_sad(sad, gateway, casing);
                    const ComponentNameList code_names = extract_names_from_code(
                        render_feature_text(model.packages), gateway, casing);
                    if (trace_aggregation == "prompt") {
                        names = aggregate_via_prompt(doc_names.names, code_names.names, gateway,
                                                     casing);
                    } else {
                        names = aggregate_via_similarity(
                            doc_names.names, code_names.names,
                            AggregationConfig{trace_threshold, casing});
                    }
                } else {
                    throw FormatError("unknown mode: " + trace_mode);
                }
                sam = build_simple_sam(names, sad.project);
                write_sam(sam, sibling_output(out, "sam"));
            }

            stage = "artemis";
            const LinkSet sad_sam = run_artemis(sad, sam, gateway, trace_match);
            write_links(sad_sam, sibling_output(out, "sad-sam"));

            stage = "codelink";
            const LinkSet sam_code = link_sam_to_code(sam, model, trace_linker);
            write_links(sam_code, sibling_output(out, "sam-code"));

            stage = "compose";
            const LinkSet sad_code = compose_links(sad_sam, sam_code);
            write_links(sad_code, out);
            return 0;
        }

        if (eval_cmd->parsed()) {
            stage = "eval";
            merge.text(opt_eval_kind, "kind", eval_kind);
            const LinkKind kind = parse_kind(eval_kind);
            const GoldStandard found_as_gold = load_gold_links(eval_found, kind);
            const GoldStandard gold = load_gold_links(eval_gold, kind);
            const ConfusionCounts counts = confusion_counts(found_as_gold.links, gold);
            ProjectResult result;
            result.project = eval_project;
            result.metrics = precision_recall_f1(counts);
            result.gold_link_count = std::max<long>(1, static_cast<long>(gold.links.size()));
            const Report report = build_report(std::span(&result, 1));
            std::cout << report.text;
            if (!out_path.empty()) {
                write_file(out_path, report.machine.dump(2) + "\n");
            }
            return 0;
        }

        if (sig_cmd->parsed()) {
            stage = "significance";
            const auto ours = load_f1_csv(sig_ours);
            const auto baseline = load_f1_csv(sig_baseline);
            std::map<std::string, double> baseline_by_project(baseline.begin(), baseline.end());
            std::vector<double> differences;
            for (const auto& [project, f1] : ours) {
                const auto it = baseline_by_project.find(project);
                if (it == baseline_by_project.end()) {
                    throw FormatError("baseline is missing project: " + project);
                }
                differences.push_back(f1 - it->second);
            }
            const WilcoxonResult result = wilcoxon_one_sided(differences);
            std::cout << sig_name << ": n=" << result.n << " W+=" << result.statistic
                      << " p=" << format_p_value(result)
                      << (result.p < 0.05 ? " significant" : " not significant")
                      << " (alpha=0.05)\n";
            if (!out_path.empty()) {
                const nlohmann::json doc{{"version", 1},
                                         {"name", sig_name},
                                         {"n", result.n},
                                         {"statistic", result.statistic},
                                         {"p", result.p},
                                         {"exact", result.exact},
                                         {"significant", result.p < 0.05}};
                write_file(out_path, doc.dump(2) + "\n");
            }
            return 0;
        }

        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << stage << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error [" << stage << "]: " << e.what() << "\n";
        return 1;
    }
}

} // namespace archtrace::cli
