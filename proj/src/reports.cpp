#include "editstat/reports.hpp"

#include "editstat/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace editstat {

namespace {

using ojson = nlohmann::ordered_json;

ojson rational_node(const Rational& r) {
    return ojson{{"fraction", to_fraction(r)}, {"decimal", to_decimal(r, 6)}};
}

Rational rational_from(const ojson& node) {
    if (!node.is_object() || !node.contains("fraction") ||
        !node["fraction"].is_string())
        throw DataError("report: malformed rational node");
    return parse_fraction(node["fraction"].get<std::string>());
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

std::string rational_line(const Rational& r) {
    return to_fraction(r) + " (" + to_decimal(r, 6) + ")";
}

std::string join(std::span<const std::string> parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
    if (name == "plain") return ReportFormat::plain;
    if (name == "structured") return ReportFormat::structured;
    return std::nullopt;
}

std::string render_distance_matrix(const DistanceMatrix& dm, ReportFormat fmt,
                                   bool include_items) {
    const std::size_t n = dm.size();
    if (fmt == ReportFormat::structured) {
        ojson doc;
        doc["n"] = n;
        if (include_items) doc["items"] = dm.items();
        ojson rows = ojson::array();
        for (std::size_t i = 0; i < n; ++i) {
            ojson row = ojson::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(dm.at(i, j));
            rows.push_back(std::move(row));
        }
        doc["matrix"] = std::move(rows);
        return dump(doc);
    }

    std::ostringstream out;
    if (include_items)
        for (std::size_t i = 0; i < n; ++i)
            out << i << ": " << dm.items()[i] << "\n";
    std::size_t width = 1;
    for (std::size_t i = 0; i < n * n; ++i)
        width = std::max(width, std::to_string(dm.values()[i]).size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::string v = std::to_string(dm.at(i, j));
            if (j > 0) out << ' ';
            out << std::string(width - v.size(), ' ') << v;
        }
        out << "\n";
    }
    return out.str();
}

std::string render_frechet(const FrechetResult& result,
                           std::span<const std::string> display,
                           std::size_t sample_size, ReportFormat fmt) {
    if (fmt == ReportFormat::structured) {
        ojson doc;
        doc["power"] = result.power;
        doc["n"] = sample_size;
        doc["minimizers"] = display.empty()
                                ? result.minimizers
                                : std::vector<std::string>(display.begin(),
                                                           display.end());
        if (!display.empty()) doc["folded"] = result.minimizers;
        doc["objective"] = rational_node(result.objective);
        return dump(doc);
    }

    std::ostringstream out;
    out << "minimizers: "
        << (display.empty() ? join(result.minimizers, " | ")
                            : join(display, " | "))
        << "\n";
    if (!display.empty() &&
        !std::equal(display.begin(), display.end(), result.minimizers.begin(),
                    result.minimizers.end()))
        out << "folded: " << join(result.minimizers, " | ") << "\n";
    out << "objective: " << rational_line(result.objective) << "\n";
    out << "power: " << result.power << "\n";
    out << "n: " << sample_size << "\n";
    return out.str();
}

std::string render_reconstruction(const ReconstructionReport& report,
                                  ReportFormat fmt) {
    if (fmt == ReportFormat::structured) {
        ojson doc;
        doc["consensus"] = report.consensus_lines;
        doc["consensus_total"] = report.consensus_total;
        doc["consensus_capped"] = report.consensus_capped;
        ojson slots = ojson::array();
        for (const SlotReconstruction& slot : report.slots) {
            ojson node;
            node["n"] = slot.sample_size;
            node["minimizers"] = slot.display;
            node["folded"] = slot.frechet.minimizers;
            node["objective"] = rational_node(slot.frechet.objective);
            slots.push_back(std::move(node));
        }
        doc["slots"] = std::move(slots);
        ojson whole;
        whole["minimizers"] = report.whole_line_display;
        whole["folded"] = report.whole_line.minimizers;
        whole["objective"] = rational_node(report.whole_line.objective);
        doc["whole_line"] = std::move(whole);
        return dump(doc);
    }

    std::ostringstream out;
    for (const std::string& line : report.consensus_lines)
        out << "consensus: " << line << "\n";
    if (report.consensus_capped)
        out << "(consensus list capped; " << report.consensus_total
            << " combinations in total)\n";
    for (std::size_t s = 0; s < report.slots.size(); ++s) {
        const SlotReconstruction& slot = report.slots[s];
        out << "slot " << s << ": " << join(slot.display, " | ")
            << "  objective " << rational_line(slot.frechet.objective) << "  n "
            << slot.sample_size << "\n";
    }
    out << "whole-line mean: " << join(report.whole_line_display, " | ") << "\n";
    out << "whole-line objective: " << rational_line(report.whole_line.objective)
        << "\n";
    return out.str();
}

namespace {

ojson group_variance_json(const GroupVarianceReport& report) {
    ojson doc;
    doc["mode"] = std::string(variance_mode_name(report.mode));
    ojson groups;
    for (const auto& [version, variance] : report.variances) {
        ojson node;
        node["size"] = report.group_sizes.at(version);
        node["variance"] = rational_node(variance);
        groups[std::string(1, version_letter(version))] = std::move(node);
    }
    doc["groups"] = std::move(groups);
    return doc;
}

}  // namespace

std::string render_group_variance(const GroupVarianceReport& report,
                                  ReportFormat fmt) {
    if (fmt == ReportFormat::structured) return dump(group_variance_json(report));

    std::ostringstream out;
    out << "mode: " << variance_mode_name(report.mode) << "\n";
    for (const auto& [version, variance] : report.variances)
        out << "Var(" << version_letter(version)
            << "): " << rational_line(variance) << "  n "
            << report.group_sizes.at(version) << "\n";
    return out.str();
}

GroupVarianceReport parse_group_variance(std::string_view structured_text) {
    ojson doc;
    try {
        doc = ojson::parse(structured_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("group variance report: not valid JSON: ") +
                        e.what());
    }
    GroupVarianceReport report;
    const auto mode = parse_variance_mode(doc.at("mode").get<std::string>());
    if (!mode) throw DataError("group variance report: unknown mode");
    report.mode = *mode;
    for (const auto& [key, node] : doc.at("groups").items()) {
        const auto version = parse_version(key);
        if (!version)
            throw DataError("group variance report: unknown group " + key);
        report.variances[*version] = rational_from(node.at("variance"));
        report.group_sizes[*version] = node.at("size").get<std::size_t>();
    }
    return report;
}

std::string render_rand_test(const RandTestReport& report, ReportFormat fmt) {
    if (fmt == ReportFormat::structured) {
        ojson doc;
        doc["mode"] = std::string(variance_mode_name(report.mode));
        doc["seed"] = report.seed;
        doc["R"] = report.num_replicates;
        doc["observed"] = ojson{{"r_a", rational_node(report.observed_r_a)},
                                {"r_c", rational_node(report.observed_r_c)}};
        doc["exceedance_count"] = report.exceedance_count;
        doc["degenerate_count"] = report.degenerate_count;
        doc["p_value"] = rational_node(report.p_value);
        ojson reps = ojson::array();
        for (const ReplicateRatios& rep : report.replicates) {
            if (rep.degenerate) reps.push_back(ojson{{"degenerate", true}});
            else
                reps.push_back(ojson{{"r_a", to_fraction(rep.r_a)},
                                     {"r_c", to_fraction(rep.r_c)}});
        }
        doc["replicates"] = std::move(reps);
        return dump(doc);
    }

    std::ostringstream out;
    out << "mode: " << variance_mode_name(report.mode) << "\n";
    out << "seed: " << report.seed << "\n";
    out << "replicates: " << report.num_replicates << "\n";
    out << "observed r_a: " << rational_line(report.observed_r_a) << "\n";
    out << "observed r_c: " << rational_line(report.observed_r_c) << "\n";
    out << "exceedance count: " << report.exceedance_count << "\n";
    out << "degenerate replicates: " << report.degenerate_count << "\n";
    out << "p value: " << rational_line(report.p_value) << "\n";
    return out.str();
}

RandTestReport parse_rand_test(std::string_view structured_text) {
    ojson doc;
    try {
        doc = ojson::parse(structured_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("randomization report: not valid JSON: ") +
                        e.what());
    }
    RandTestReport report;
    const auto mode = parse_variance_mode(doc.at("mode").get<std::string>());
    if (!mode) throw DataError("randomization report: unknown mode");
    report.mode = *mode;
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.num_replicates = doc.at("R").get<std::size_t>();
    report.observed_r_a = rational_from(doc.at("observed").at("r_a"));
    report.observed_r_c = rational_from(doc.at("observed").at("r_c"));
    report.exceedance_count = doc.at("exceedance_count").get<std::size_t>();
    report.degenerate_count = doc.at("degenerate_count").get<std::size_t>();
    report.p_value = rational_from(doc.at("p_value"));
    for (const ojson& node : doc.at("replicates")) {
        ReplicateRatios rep;
        if (node.contains("degenerate") && node["degenerate"].get<bool>()) {
            rep.degenerate = true;
        } else {
            rep.r_a = parse_fraction(node.at("r_a").get<std::string>());
            rep.r_c = parse_fraction(node.at("r_c").get<std::string>());
        }
        report.replicates.push_back(std::move(rep));
    }
    return report;
}

std::string render_replicate_table(const RandTestReport& report) {
    std::ostringstream out;
    for (const ReplicateRatios& rep : report.replicates) {
        if (rep.degenerate) out << "NA NA\n";
        else out << to_decimal(rep.r_a, 6) << ' ' << to_decimal(rep.r_c, 6) << "\n";
    }
    return out.str();
}

std::string render_clustering(const Clustering& clustering, ReportFormat fmt) {
    if (fmt == ReportFormat::structured) {
        ojson doc;
        doc["k"] = clustering.k;
        doc["objective"] = clustering.objective;
        doc["objective_trace"] = clustering.objective_trace;
        doc["medoids"] = clustering.medoids;
        ojson assignments;
        for (const auto& [id, cluster] : clustering.assignments)
            assignments[id] = cluster;
        doc["assignments"] = std::move(assignments);
        return dump(doc);
    }

    std::ostringstream out;
    out << "k: " << clustering.k << "\n";
    out << "objective: " << clustering.objective << "\n";
    for (std::size_t c = 0; c < clustering.medoids.size(); ++c)
        out << "medoid " << c << ": " << clustering.medoids[c] << "\n";
    for (const auto& [id, cluster] : clustering.assignments)
        out << id << " -> " << cluster << "\n";
    return out.str();
}

}  // namespace editstat
