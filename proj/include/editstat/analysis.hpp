#pragma once

#include "editstat/corpus.hpp"
#include "editstat/frechet.hpp"
#include "editstat/metric.hpp"
#include "editstat/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace editstat {

// ---------------------------------------------------------------------------
// Consensus line reconstruction

struct SlotReconstruction {
    FrechetResult frechet;             // over normalized comparison forms
    std::vector<std::string> display;  // original-case forms, same order
    std::size_t sample_size = 0;       // tokens aligned to this slot
};

struct ReconstructionReport {
    std::vector<SlotReconstruction> slots;
    // Cartesian product of per-slot display minimizers, joined with single
    // spaces; capped at kConsensusCap lines.
    std::vector<std::string> consensus_lines;
    std::size_t consensus_total = 0;  // product size before the cap
    bool consensus_capped = false;
    FrechetResult whole_line;  // over the variants' comparison copies
    std::vector<std::string> whole_line_display;  // attested original lines
};

inline constexpr std::size_t kConsensusCap = 64;

// Tokenizes and aligns the variants, minimizes f per template slot over the
// slot's attested tokens, and also computes the whole-line minimizers over
// the variants. Both use the normalization's comparison copies; reported
// forms are the attested originals. Requires at least 2 variants.
ReconstructionReport reconstruct_line(std::span<const std::string> variants,
                                      const Normalization& norm,
                                      unsigned power = 2);

// Fréchet minimizers over the normalized comparison forms of the data, with
// display forms chosen as the most frequent original spelling among the data
// items equal to each minimizer (ties to first occurrence).
struct MeanReport {
    FrechetResult frechet;
    std::vector<std::string> display;
    std::size_t sample_size = 0;
};

MeanReport string_mean(std::span<const std::string> data,
                       const Normalization& norm, unsigned power = 2);

// ---------------------------------------------------------------------------
// Group variance and the randomization test

enum class VarianceMode { per_line_sum, concatenated };

std::string_view variance_mode_name(VarianceMode mode) noexcept;
std::optional<VarianceMode> parse_variance_mode(std::string_view name) noexcept;

struct GroupVarianceReport {
    VarianceMode mode = VarianceMode::per_line_sum;
    std::map<Version, Rational> variances;
    std::map<Version, std::size_t> group_sizes;
};

// Per version: in per_line_sum mode, the sum over the selected line
// positions of the variance of that position's lines across the version's
// witnesses; in concatenated mode, one variance over the witnesses' joined
// selected lines. Comparisons use the corpus normalization.
GroupVarianceReport group_variance(const Corpus& corpus,
                                   VarianceMode mode = VarianceMode::per_line_sum);

// (Var(A)/Var(B), Var(C)/Var(B)), exactly. Requires all three groups and
// Var(B) > 0.
std::pair<Rational, Rational> variance_ratios(const GroupVarianceReport& report);

struct ReplicateRatios {
    bool degenerate = false;  // permuted Var(B) was zero
    Rational r_a;
    Rational r_c;
};

struct RandTestReport {
    VarianceMode mode = VarianceMode::per_line_sum;
    std::uint64_t seed = 0;
    std::size_t num_replicates = 0;  // R
    Rational observed_r_a;
    Rational observed_r_c;
    std::vector<ReplicateRatios> replicates;
    std::size_t exceedance_count = 0;  // r_a > observed AND r_c > observed
    std::size_t degenerate_count = 0;
    Rational p_value;  // exceedance_count / R, exactly
};

// Permutes the version labels uniformly at random over the included
// witnesses (group sizes preserved) R times and counts replicates that
// strictly exceed both observed ratios. Deterministic given the seed: each
// replicate draws from its own substream, so results do not depend on
// scheduling. Replicates with a zero denominator count as non-exceeding and
// are flagged.
RandTestReport randomization_test(const Corpus& corpus, std::size_t R,
                                  std::uint64_t seed,
                                  VarianceMode mode = VarianceMode::per_line_sum,
                                  unsigned threads = 0);

// ---------------------------------------------------------------------------
// k-medoids clustering (PAM)

struct PamResult {
    std::vector<std::size_t> medoids;     // point indices, ascending
    std::vector<std::size_t> assignment;  // per point, cluster index
    std::uint64_t objective = 0;          // sum of distances to medoids
    // Objective after initialization and after each accepted swap; never
    // increasing.
    std::vector<std::uint64_t> objective_trace;
};

// Greedy BUILD initialization followed by best-improvement SWAP until no
// swap reduces the objective. Fully deterministic.
PamResult pam(const DistanceMatrix& dm, std::size_t k);

struct Clustering {
    std::size_t k = 0;
    std::vector<std::string> medoids;             // witness ids per cluster
    std::map<std::string, std::size_t> assignments;  // witness id -> cluster
    std::uint64_t objective = 0;
    std::vector<std::uint64_t> objective_trace;
};

// Clusters the included witnesses on the pairwise distances between their
// joined selected lines (separator: newline, absent from the line text).
// The deterministic BUILD start is the default; restarts > 0 adds seeded
// random initializations and keeps the best objective.
Clustering cluster_witnesses(const Corpus& corpus, std::size_t k,
                             std::uint64_t seed = 0, unsigned restarts = 0);

// ---------------------------------------------------------------------------
// Shared preparation

// Included witnesses in corpus order with their selected lines as normalized
// comparison text. Witnesses with at least six lines contribute the
// selection rule's six lines; corpora whose witnesses all share one smaller
// line count fall back to every line. Mixed counts below six are an error.
struct WitnessTable {
    std::vector<std::string> ids;
    std::vector<std::optional<Version>> versions;
    std::vector<std::vector<std::u32string>> selected;  // [witness][position]
    std::vector<std::u32string> joined;                 // newline-separated
    std::size_t positions = 0;
};

WitnessTable prepare_witnesses(const Corpus& corpus);

// Pairwise distance matrix over the witnesses' joined selected lines,
// labeled by witness id.
DistanceMatrix witness_distance_matrix(const Corpus& corpus,
                                       unsigned threads = 0);

}  // namespace editstat
