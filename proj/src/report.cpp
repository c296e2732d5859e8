#include "archtrace/report.hpp"

#include "archtrace/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace archtrace {

std::string format_metric(double value) {
    const int cents = std::clamp(static_cast<int>(std::floor(value * 100.0 + 0.5)), 0, 100);
    if (cents >= 100) {
        return "1.0";
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), ".%02d", cents);
    return buf;
}

std::string format_p_value(const WilcoxonResult& result) {
    const int mills = std::clamp(static_cast<int>(std::floor(result.p * 1000.0 + 0.5)), 0, 1000);
    char buf[16];
    if (mills >= 1000) {
        std::snprintf(buf, sizeof(buf), "1.000%s", result.exact ? "" : "*");
    } else {
        std::snprintf(buf, sizeof(buf), ".%03d%s", mills, result.exact ? "" : "*");
    }
    return buf;
}

namespace {

void append_row(std::string& text, const std::string& label, const Metrics& metrics) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%-14s %6s %6s %6s\n", label.c_str(),
                  format_metric(metrics.precision).c_str(), format_metric(metrics.recall).c_str(),
                  format_metric(metrics.f1).c_str());
    text += buf;
}

} // namespace

Report build_report(std::span<const ProjectResult> results,
                    std::span<const SignificanceComparison> comparisons) {
    if (results.empty()) {
        throw PreconditionError("report needs at least one project result");
    }
    const Metrics avg = macro_average(results);
    const Metrics weighted = weighted_average(results);

    Report report;

    nlohmann::json projects = nlohmann::json::array();
    for (const auto& result : results) {
        projects.push_back({{"project", result.project},
                            {"precision", result.metrics.precision},
                            {"recall", result.metrics.recall},
                            {"f1", result.metrics.f1},
                            {"goldLinkCount", result.gold_link_count}});
    }
    nlohmann::json significance = nlohmann::json::array();
    for (const auto& comparison : comparisons) {
        significance.push_back({{"name", comparison.name},
                                {"p", comparison.result.p},
                                {"exact", comparison.result.exact},
                                {"statistic", comparison.result.statistic},
                                {"significant", comparison.result.p < 0.05}});
    }
    report.machine = {{"version", 1},
                      {"projects", std::move(projects)},
                      {"average",
                       {{"precision", avg.precision}, {"recall", avg.recall}, {"f1", avg.f1}}},
                      {"weightedAverage",
                       {{"precision", weighted.precision},
                        {"recall", weighted.recall},
                        {"f1", weighted.f1}}},
                      {"significance", std::move(significance)}};

    std::string& text = report.text;
    char header[96];
    std::snprintf(header, sizeof(header), "%-14s %6s %6s %6s\n", "Project", "P", "R", "F1");
    text += header;
    text += "----------------------------------\n";
    for (const auto& result : results) {
        append_row(text, result.project, result.metrics);
    }
    text += "----------------------------------\n";
    append_row(text, "Avg", avg);
    append_row(text, "w. Avg", weighted);

    if (!comparisons.empty()) {
        text += "\nSignificance (one-sided Wilcoxon signed-rank, alpha=0.05";
        text += ", * = not exact)\n";
        for (const auto& comparison : comparisons) {
            char line[128];
            std::snprintf(line, sizeof(line), "%-24s p=%-8s %s\n", comparison.name.c_str(),
                          format_p_value(comparison.result).c_str(),
                          comparison.result.p < 0.05 ? "significant" : "not significant");
            text += line;
        }
    }
    return report;
}

} // namespace archtrace
