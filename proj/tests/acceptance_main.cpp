// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero if any fail.

#include "editstat/analysis.hpp"
#include "editstat/corpus.hpp"
#include "editstat/error.hpp"
#include "editstat/frechet.hpp"
#include "editstat/metric.hpp"
#include "editstat/reports.hpp"
#include "editstat/unicode.hpp"
#include "corpus_fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace editstat;

namespace {

int failures = 0;
std::string detail;  // optional note set by a criterion body

void run_criterion(int number, const char* title,
                   const std::function<void()>& body) {
    detail.clear();
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const std::string note = detail.empty() ? "" : " [" + detail + "]";
    if (error.empty()) {
        std::printf("PASS %2d  %s (%.2f s)%s\n", number, title, seconds,
                    note.c_str());
    } else {
        ++failures;
        std::printf("FAIL %2d  %s (%.2f s): %s\n", number, title, seconds,
                    error.c_str());
    }
}

void expect(bool ok, const std::string& message) {
    if (!ok) throw std::runtime_error(message);
}

void expect_under(double seconds, double limit) {
    expect(seconds < limit,
           "runtime " + std::to_string(seconds) + " s exceeds " +
               std::to_string(limit) + " s");
}

std::string data_path(const char* name) {
    return std::string(EDITSTAT_DATA_DIR) + "/" + name;
}

std::vector<std::string> figure1_lines() {
    const Corpus corpus = load_corpus(data_path("figure1_b.json"));
    std::vector<std::string> lines;
    for (const Witness& w : corpus.witnesses) lines.push_back(w.lines[0]);
    return lines;
}

std::string ascii_lower(std::string_view text) {
    std::string out;
    for (const char c : text)
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// The manuscript normalization: fold case, treat "&" as "and".
Normalization manuscript_normalization() {
    Normalization norm;
    norm.map_ampersand_to_and = true;
    return norm;
}

}  // namespace

int main() {
    // 1. word-level reconstruction of the seventeen-line fixture
    run_criterion(1, "word-level consensus of the 17-line fixture", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto lines = figure1_lines();
        const ReconstructionReport report =
            reconstruct_line(lines, Normalization{}, 2);
        expect(report.consensus_lines.size() == 1,
               "expected a unique consensus, got " +
                   std::to_string(report.consensus_lines.size()));
        expect(ascii_lower(report.consensus_lines[0]) ==
                   "brewsters and baksters bochers and cokes",
               "consensus was \"" + report.consensus_lines[0] + "\"");
        const double seconds = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        expect_under(seconds, 1.0);
    });

    // 2. whole-line mean equals the third-to-last fixture line verbatim
    run_criterion(2, "whole-line mean is the third-to-last fixture line", [] {
        const auto lines = figure1_lines();
        const ReconstructionReport report =
            reconstruct_line(lines, manuscript_normalization(), 2);
        expect(report.whole_line_display.size() == 1,
               "expected a unique whole-line mean, got " +
                   std::to_string(report.whole_line_display.size()));
        const std::string& mean = report.whole_line_display[0];
        expect(mean == lines[lines.size() - 3],
               "mean was \"" + mean + "\"");
        expect(mean == "Brewsters and baksters bochers & cokes",
               "mean was \"" + mean + "\"");
    });

    // 3. the brewers multiset: squared power vs first power
    run_criterion(3, "brewers multiset minimizers (p=2 vs p=1)", [] {
        std::vector<std::string> data(10, "brewers");
        data.insert(data.end(), {"breweres", "breueres", "bruweres", "brueres"});
        const FrechetResult squared = frechet_minimizers(data, support(data), 2);
        expect(squared.minimizers == std::vector<std::string>{"breweres"},
               "p=2 minimizers wrong");
        const FrechetResult first = frechet_minimizers(data, support(data), 1);
        expect(first.minimizers == std::vector<std::string>{"brewers"},
               "p=1 minimizers wrong");
    });

    // 4. variance ratios from the published constants
    run_criterion(4, "variance ratios round to 1.981 and 1.239", [] {
        GroupVarianceReport report;
        report.variances = {{Version::A, Rational(433838, 100)},
                            {Version::B, Rational(218993, 100)},
                            {Version::C, Rational(271333, 100)}};
        report.group_sizes = {{Version::A, 14}, {Version::B, 17}, {Version::C, 9}};
        const auto [r_a, r_c] = variance_ratios(report);
        expect(to_decimal(r_a, 3) == "1.981", "r_a rounds to " + to_decimal(r_a, 3));
        expect(to_decimal(r_c, 3) == "1.239", "r_c rounds to " + to_decimal(r_c, 3));
    });

    // 5. DP equals the recursive-definition oracle on every short pair
    run_criterion(5, "oracle equivalence on all length<=6 pairs (3 letters)", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto strings = oracles::all_strings(U"abc", 6);
        for (std::size_t i = 0; i < strings.size(); ++i) {
            for (std::size_t j = i; j < strings.size(); ++j) {
                const std::uint64_t reference =
                    oracles::lev_recursive(strings[i], strings[j]);
                if (edit_distance(strings[i], strings[j]) != reference ||
                    edit_distance(strings[j], strings[i]) != reference)
                    throw std::runtime_error(
                        "mismatch at \"" + encode_utf8(strings[i]) + "\" / \"" +
                        encode_utf8(strings[j]) + "\"");
            }
        }
        const double seconds = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        expect_under(seconds, 30.0);
    });

    // 6. metric axioms on 1000 seeded random triples
    run_criterion(6, "metric axioms on 1000 seeded triples", [] {
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto a = oracles::random_string(rng, oracles::kAlphabet, 20);
            const auto b = oracles::random_string(rng, oracles::kAlphabet, 20);
            const auto c = oracles::random_string(rng, oracles::kAlphabet, 20);
            const auto dab = edit_distance(a, b);
            expect(dab == edit_distance(b, a), "symmetry violated");
            expect((dab == 0) == (a == b), "identity violated");
            expect(edit_distance(a, c) <= dab + edit_distance(b, c),
                   "triangle inequality violated");
        }
    });

    // 7. minimizer sets match a direct scan on 200 seeded multisets
    run_criterion(7, "exhaustive-scan agreement on 200 seeded multisets", [] {
        std::mt19937_64 rng(4242);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::u32string> data;
            const std::size_t n = 1 + rng() % 12;
            for (std::size_t i = 0; i < n; ++i)
                data.push_back(oracles::random_string(rng, oracles::kAlphabet, 8));

            const FrechetResult result = frechet_minimizers(
                std::span<const std::u32string>(data),
                std::span<const std::u32string>(data), 2);

            std::vector<std::u32string> pool = data;
            std::sort(pool.begin(), pool.end());
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
            BigInt best = -1;
            std::vector<std::string> expected;
            for (const auto& cand : pool) {
                const BigInt sum = oracles::powered_sum_direct(cand, data, 2);
                if (best < 0 || sum < best) {
                    best = sum;
                    expected.assign(1, encode_utf8(cand));
                } else if (sum == best) {
                    expected.push_back(encode_utf8(cand));
                }
            }
            expect(result.minimizers == expected,
                   "minimizer set mismatch at trial " + std::to_string(trial));
            expect(result.objective == Rational(best, BigInt(data.size())),
                   "objective mismatch at trial " + std::to_string(trial));
        }
    });

    // 8. planted clustering is recovered exactly through the corpus pipeline
    run_criterion(8, "planted three-group clustering, k=3", [] {
        const auto start = std::chrono::steady_clock::now();
        Corpus corpus;
        std::mt19937_64 rng(88);
        const std::array<char32_t, 3> letters{U'a', U'm', U'þ'};
        std::vector<std::size_t> truth;
        for (std::size_t g = 0; g < 3; ++g) {
            for (std::size_t i = 0; i < 5; ++i) {
                Witness w;
                w.id = "g" + std::to_string(g) + "w" + std::to_string(i);
                std::vector<std::u32string> lines(6,
                                                  std::u32string(10, letters[g]));
                // at most 2 edits across the whole witness
                for (std::size_t e = rng() % 3; e > 0; --e)
                    fixtures::mutate(lines[rng() % lines.size()], rng, 1);
                for (const auto& line : lines) w.lines.push_back(encode_utf8(line));
                corpus.witnesses.push_back(std::move(w));
                truth.push_back(g);
            }
        }
        const Clustering clustering = cluster_witnesses(corpus, 3);
        std::map<std::size_t, std::size_t> mapping;
        std::set<std::size_t> used;
        for (std::size_t i = 0; i < corpus.witnesses.size(); ++i) {
            const std::size_t assigned =
                clustering.assignments.at(corpus.witnesses[i].id);
            const auto [it, inserted] = mapping.emplace(truth[i], assigned);
            expect(it->second == assigned, "partition differs from planted");
            if (inserted) used.insert(assigned);
        }
        expect(used.size() == 3, "clusters collapsed");
        const double seconds = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        expect_under(seconds, 5.0);
    });

    // 9. randomization test: determinism and exceedance recount
    run_criterion(9, "randomization test determinism and recount", [] {
        const Corpus corpus = load_corpus(data_path("synthetic40.json"));
        const RandTestReport first = randomization_test(corpus, 1000, 7);
        const RandTestReport second = randomization_test(corpus, 1000, 7);
        const std::string text_first =
            render_rand_test(first, ReportFormat::structured);
        expect(text_first == render_rand_test(second, ReportFormat::structured),
               "same seed produced different reports");

        const RandTestReport parsed = parse_rand_test(text_first);
        std::size_t recount = 0;
        for (const ReplicateRatios& rep : parsed.replicates)
            if (!rep.degenerate && rep.r_a > parsed.observed_r_a &&
                rep.r_c > parsed.observed_r_c)
                ++recount;
        expect(recount == first.exceedance_count, "recount mismatch");
        expect(parsed.p_value ==
                   Rational(BigInt(recount), BigInt(first.num_replicates)),
               "p-value does not equal count/R");
    });

    // 10. end-to-end run on the bundled synthetic corpus
    run_criterion(10, "synthetic 40-witness corpus: p <= 0.01 at R=5000", [] {
        const Corpus corpus = load_corpus(data_path("synthetic40.json"));
        const WitnessTable table = prepare_witnesses(corpus);
        expect(table.ids.size() == 40, "expected 40 included witnesses");
        const RandTestReport report =
            randomization_test(corpus, 5000, 20260811);
        expect(report.observed_r_a > 1, "observed r_a not > 1");
        expect(report.observed_r_c > 1, "observed r_c not > 1");
        expect(report.p_value <= Rational(1, 100),
               "p = " + to_fraction(report.p_value));
        detail = "p = " + to_fraction(report.p_value) + " = " +
                 to_decimal(report.p_value, 6);
    });

    if (failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
