#include "editstat/analysis.hpp"
#include "editstat/corpus.hpp"
#include "editstat/error.hpp"
#include "editstat/frechet.hpp"
#include "editstat/metric.hpp"
#include "editstat/reports.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace editstat;

std::vector<std::string> read_stdin_lines() {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

ReportFormat format_from(const std::string& name) {
    const auto fmt = parse_report_format(name);
    if (!fmt) throw DataError("unknown format: " + name);
    return *fmt;
}

VarianceMode mode_from(const std::string& name) {
    const auto mode = parse_variance_mode(name);
    if (!mode) throw DataError("unknown variance mode: " + name);
    return *mode;
}

void add_normalization_flags(CLI::App* sub, Normalization& norm) {
    sub->add_flag("--fold-case,!--no-fold-case", norm.fold_case,
                  "Fold case in comparison forms (default on)");
    sub->add_flag("--map-ampersand", norm.map_ampersand_to_and,
                  "Treat \"&\" tokens as \"and\" in comparisons");
    sub->add_flag("--strip-punctuation", norm.strip_punctuation,
                  "Drop ASCII punctuation from comparison forms");
}

void add_format_flag(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "Output format: plain or structured")
        ->check(CLI::IsMember({"plain", "structured"}));
}

Corpus load_with(const std::string& path, const Normalization& norm) {
    Corpus corpus = load_corpus(path);
    corpus.normalization = norm;
    return corpus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "editstat: statistics over string-valued data under edit distance\n"
        "(generalized means, medians and variances, randomization tests,\n"
        "k-medoids clustering, consensus line reconstruction)"};
    app.require_subcommand(1);

    // dist ------------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "Edit distance between two strings");
    std::string dist_a, dist_b;
    EditCosts costs;
    dist->add_option("a", dist_a, "First string")->required();
    dist->add_option("b", dist_b, "Second string")->required();
    dist->add_option("--insert-cost", costs.insert_cost, "Insertion cost");
    dist->add_option("--delete-cost", costs.delete_cost, "Deletion cost");
    dist->add_option("--substitute-cost", costs.substitute_cost,
                     "Substitution cost");
    dist->callback([&] { std::cout << edit_distance(dist_a, dist_b, costs) << "\n"; });

    // mean ------------------------------------------------------------------
    auto* mean = app.add_subcommand(
        "mean", "Generalized mean/median of strings (args or stdin lines)");
    std::vector<std::string> mean_data;
    unsigned mean_power = 2;
    Normalization mean_norm;
    std::string mean_format = "plain";
    mean->add_option("strings", mean_data, "Data strings (stdin when absent)");
    mean->add_option("--power", mean_power, "Objective power (2 mean, 1 median)");
    add_normalization_flags(mean, mean_norm);
    add_format_flag(mean, mean_format);
    mean->callback([&] {
        std::vector<std::string> data = mean_data;
        if (data.empty()) data = read_stdin_lines();
        if (data.empty()) throw DataError("mean: no input strings");
        const MeanReport report = string_mean(data, mean_norm, mean_power);
        std::cout << render_frechet(report.frechet, report.display,
                                    report.sample_size,
                                    format_from(mean_format));
    });

    // matrix ----------------------------------------------------------------
    auto* matrix = app.add_subcommand(
        "matrix", "Pairwise distance matrix over the corpus witnesses");
    std::string matrix_input, matrix_format = "plain";
    Normalization matrix_norm;
    matrix->add_option("--input", matrix_input, "Corpus file")->required();
    add_normalization_flags(matrix, matrix_norm);
    add_format_flag(matrix, matrix_format);
    matrix->callback([&] {
        const Corpus corpus = load_with(matrix_input, matrix_norm);
        std::cout << render_distance_matrix(witness_distance_matrix(corpus),
                                            format_from(matrix_format));
    });

    // reconstruct -------------------------------------------------------------
    auto* reconstruct = app.add_subcommand(
        "reconstruct", "Consensus reconstruction of one line across witnesses");
    std::string rec_input, rec_format = "plain", rec_version;
    std::size_t rec_line = 1;
    unsigned rec_power = 2;
    Normalization rec_norm;
    reconstruct->add_option("--input", rec_input, "Corpus file")->required();
    reconstruct->add_option("--line", rec_line, "1-based line number (default 1)");
    reconstruct->add_option("--version", rec_version,
                            "Only witnesses with this version label (A/B/C)")
        ->check(CLI::IsMember({"A", "B", "C"}));
    reconstruct->add_option("--power", rec_power, "Objective power");
    add_normalization_flags(reconstruct, rec_norm);
    add_format_flag(reconstruct, rec_format);
    reconstruct->callback([&] {
        const Corpus corpus = load_with(rec_input, rec_norm);
        std::optional<Version> wanted;
        if (!rec_version.empty()) wanted = parse_version(rec_version);
        if (rec_line == 0) throw DataError("reconstruct: line numbers are 1-based");
        std::vector<std::string> variants;
        for (const Witness& w : corpus.witnesses) {
            if (w.excluded) continue;
            if (wanted && w.version != wanted) continue;
            if (rec_line > w.lines.size())
                throw DataError("reconstruct: witness " + w.id + " has only " +
                                std::to_string(w.lines.size()) + " lines");
            variants.push_back(w.lines[rec_line - 1]);
        }
        const ReconstructionReport report =
            reconstruct_line(variants, corpus.normalization, rec_power);
        std::cout << render_reconstruction(report, format_from(rec_format));
    });

    // variance ----------------------------------------------------------------
    auto* variance = app.add_subcommand(
        "variance", "Per-version group variances over the selected lines");
    std::string var_input, var_format = "plain", var_mode = "per-line-sum";
    Normalization var_norm;
    variance->add_option("--input", var_input, "Corpus file")->required();
    variance->add_option("--variance-mode", var_mode,
                         "per-line-sum or concatenated")
        ->check(CLI::IsMember({"per-line-sum", "concatenated"}));
    add_normalization_flags(variance, var_norm);
    add_format_flag(variance, var_format);
    variance->callback([&] {
        const Corpus corpus = load_with(var_input, var_norm);
        const GroupVarianceReport report =
            group_variance(corpus, mode_from(var_mode));
        std::cout << render_group_variance(report, format_from(var_format));
    });

    // randtest ----------------------------------------------------------------
    auto* randtest = app.add_subcommand(
        "randtest", "Variance-ratio randomization test over version labels");
    std::string rt_input, rt_format = "plain", rt_mode = "per-line-sum";
    std::string rt_dump;
    std::size_t rt_replicates = 5000;
    std::uint64_t rt_seed = 0;
    Normalization rt_norm;
    randtest->add_option("--input", rt_input, "Corpus file")->required();
    randtest->add_option("--R", rt_replicates, "Replicate count (default 5000)");
    randtest->add_option("--seed", rt_seed, "RNG seed (required)")->required();
    randtest->add_option("--variance-mode", rt_mode,
                         "per-line-sum or concatenated")
        ->check(CLI::IsMember({"per-line-sum", "concatenated"}));
    randtest->add_option("--dump-replicates", rt_dump,
                         "Write the replicate ratio pairs to this file");
    add_normalization_flags(randtest, rt_norm);
    add_format_flag(randtest, rt_format);
    randtest->callback([&] {
        const Corpus corpus = load_with(rt_input, rt_norm);
        const RandTestReport report = randomization_test(
            corpus, rt_replicates, rt_seed, mode_from(rt_mode));
        if (!rt_dump.empty()) {
            std::ofstream out(rt_dump, std::ios::binary);
            if (!out) throw DataError("cannot open " + rt_dump + " for writing");
            out << render_replicate_table(report);
        }
        std::cout << render_rand_test(report, format_from(rt_format));
    });

    // cluster -----------------------------------------------------------------
    auto* cluster = app.add_subcommand(
        "cluster", "k-medoids clustering of witnesses by edit distance");
    std::string cl_input, cl_format = "plain";
    std::size_t cl_k = 4;
    std::uint64_t cl_seed = 0;
    unsigned cl_restarts = 0;
    Normalization cl_norm;
    cluster->add_option("--input", cl_input, "Corpus file")->required();
    cluster->add_option("--k", cl_k, "Number of clusters (default 4)");
    cluster->add_option("--seed", cl_seed,
                        "RNG seed for randomized restarts (default 0)");
    cluster->add_option("--restarts", cl_restarts,
                        "Extra seeded random initializations (default 0)");
    add_normalization_flags(cluster, cl_norm);
    add_format_flag(cluster, cl_format);
    cluster->callback([&] {
        const Corpus corpus = load_with(cl_input, cl_norm);
        const Clustering clustering =
            cluster_witnesses(corpus, cl_k, cl_seed, cl_restarts);
        std::cout << render_clustering(clustering, format_from(cl_format));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
