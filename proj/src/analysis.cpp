#include "editstat/analysis.hpp"

#include "editstat/error.hpp"
#include "editstat/unicode.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>

namespace editstat {

namespace {

std::string count_str(std::size_t n) { return std::to_string(n); }

// ---------------------------------------------------------------------------
// Seeded substreams. Replicate r draws from its own generator seeded with the
// SplitMix64 output at stream position r, so replicates are independent of
// scheduling and of each other.

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Unbiased draw from [0, n). std::uniform_int_distribution is
// implementation-defined, so reports would not be byte-identical across
// platforms; this rejection sampler is fully specified.
std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    if (rem == 0) return rng() % n;
    const std::uint64_t limit = ~std::uint64_t{0} - rem + 1;  // 2^64 - rem
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

template <typename T>
void shuffle_values(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[bounded_uint(rng, i)]);
}

BigInt bigint_from_u128(unsigned __int128 v) {
    BigInt out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Consensus line reconstruction

namespace {

// Most frequent original-case form among the slot's items whose comparison
// form equals the minimizer; ties go to the first occurrence.
std::string display_form(std::span<const Token> items,
                         const std::string& minimizer) {
    std::vector<std::pair<std::string, std::size_t>> counts;
    for (const auto& item : items) {
        if (item.comparison != minimizer) continue;
        auto it = std::find_if(counts.begin(), counts.end(),
                               [&](const auto& c) { return c.first == item.original; });
        if (it == counts.end()) counts.emplace_back(item.original, 1);
        else ++it->second;
    }
    std::size_t best = 0;
    std::string out = minimizer;
    for (const auto& [original, count] : counts)
        if (count > best) { best = count; out = original; }
    return out;
}

}  // namespace

ReconstructionReport reconstruct_line(std::span<const std::string> variants,
                                      const Normalization& norm,
                                      unsigned power) {
    if (variants.size() < 2)
        throw DataError("reconstruct_line: need at least 2 variants");

    std::vector<std::vector<Token>> token_lines;
    token_lines.reserve(variants.size());
    for (const auto& variant : variants)
        token_lines.push_back(tokenize(variant, norm));

    const TokenAlignment alignment = align_tokens(token_lines);

    ReconstructionReport report;
    report.slots.reserve(alignment.template_length);
    for (std::size_t s = 0; s < alignment.template_length; ++s) {
        std::vector<Token> slot_items;
        for (std::size_t li = 0; li < token_lines.size(); ++li)
            if (const auto& tok = alignment.slots[li][s])
                slot_items.push_back(token_lines[li][*tok]);

        SlotReconstruction slot;
        slot.sample_size = slot_items.size();
        std::vector<std::string> data;
        data.reserve(slot_items.size());
        for (const auto& item : slot_items) data.push_back(item.comparison);
        slot.frechet = frechet_minimizers(data, data, power);
        slot.display.reserve(slot.frechet.minimizers.size());
        for (const auto& m : slot.frechet.minimizers)
            slot.display.push_back(display_form(slot_items, m));
        report.slots.push_back(std::move(slot));
    }

    // Cartesian product of per-slot display forms, slot-major order.
    report.consensus_total = 1;
    for (const auto& slot : report.slots) {
        if (__builtin_mul_overflow(report.consensus_total, slot.display.size(),
                                   &report.consensus_total))
            report.consensus_total = std::numeric_limits<std::size_t>::max();
    }
    const std::size_t emit = std::min(report.consensus_total, kConsensusCap);
    report.consensus_capped = report.consensus_total > kConsensusCap;
    std::vector<std::size_t> odometer(report.slots.size(), 0);
    for (std::size_t line = 0; line < emit; ++line) {
        std::string joined;
        for (std::size_t s = 0; s < report.slots.size(); ++s) {
            if (s > 0) joined += ' ';
            joined += report.slots[s].display[odometer[s]];
        }
        report.consensus_lines.push_back(std::move(joined));
        for (std::size_t s = report.slots.size(); s-- > 0;) {
            if (++odometer[s] < report.slots[s].display.size()) break;
            odometer[s] = 0;
        }
    }

    std::vector<Token> line_items;
    line_items.reserve(variants.size());
    std::vector<std::string> comparisons;
    comparisons.reserve(variants.size());
    for (const auto& variant : variants) {
        line_items.push_back(Token{variant, normalize_text(variant, norm)});
        comparisons.push_back(line_items.back().comparison);
    }
    report.whole_line = frechet_minimizers(comparisons, comparisons, power);
    for (const auto& m : report.whole_line.minimizers)
        report.whole_line_display.push_back(display_form(line_items, m));
    return report;
}

MeanReport string_mean(std::span<const std::string> data,
                       const Normalization& norm, unsigned power) {
    if (data.empty()) throw DataError("string_mean: empty data");
    std::vector<Token> items;
    items.reserve(data.size());
    std::vector<std::string> comparisons;
    comparisons.reserve(data.size());
    for (const auto& value : data) {
        items.push_back(Token{value, normalize_text(value, norm)});
        comparisons.push_back(items.back().comparison);
    }
    MeanReport report;
    report.sample_size = data.size();
    report.frechet = frechet_minimizers(comparisons, comparisons, power);
    report.display.reserve(report.frechet.minimizers.size());
    for (const auto& m : report.frechet.minimizers)
        report.display.push_back(display_form(items, m));
    return report;
}

// ---------------------------------------------------------------------------
// Witness preparation

std::string_view variance_mode_name(VarianceMode mode) noexcept {
    return mode == VarianceMode::per_line_sum ? "per-line-sum" : "concatenated";
}

std::optional<VarianceMode> parse_variance_mode(std::string_view name) noexcept {
    if (name == "per-line-sum") return VarianceMode::per_line_sum;
    if (name == "concatenated") return VarianceMode::concatenated;
    return std::nullopt;
}

WitnessTable prepare_witnesses(const Corpus& corpus) {
    WitnessTable table;
    bool first = true;
    for (const Witness& w : corpus.witnesses) {
        if (w.excluded) continue;
        if (w.lines.empty())
            throw DataError("witness " + w.id + ": no lines");

        // The selection rule needs six lines; corpora whose witnesses all
        // share one smaller count fall back to every line.
        std::vector<std::string> selected =
            w.lines.size() >= 6 ? select_lines(w) : w.lines;
        if (first) {
            table.positions = selected.size();
            first = false;
        } else if (selected.size() != table.positions) {
            throw DataError("witness " + w.id + ": selects " +
                            count_str(selected.size()) +
                            " lines but the corpus selection length is " +
                            count_str(table.positions));
        }

        std::vector<std::u32string> normalized;
        normalized.reserve(selected.size());
        std::u32string joined;
        for (std::size_t i = 0; i < selected.size(); ++i) {
            normalized.push_back(
                normalize_scalars(decode_utf8(selected[i]), corpus.normalization));
            if (i > 0) joined += U'\n';
            joined += normalized.back();
        }
        table.ids.push_back(w.id);
        table.versions.push_back(w.version);
        table.selected.push_back(std::move(normalized));
        table.joined.push_back(std::move(joined));
    }
    if (table.ids.empty()) throw DataError("corpus has no included witnesses");
    return table;
}

DistanceMatrix witness_distance_matrix(const Corpus& corpus, unsigned threads) {
    const WitnessTable table = prepare_witnesses(corpus);
    return distance_matrix(table.joined, table.ids, EditCosts{}, threads);
}

// ---------------------------------------------------------------------------
// Group variance

namespace {

std::map<Version, std::vector<std::size_t>> version_groups(
    const WitnessTable& table) {
    std::map<Version, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
        if (!table.versions[i])
            throw DataError("witness " + table.ids[i] + " has no version label");
        groups[*table.versions[i]].push_back(i);
    }
    return groups;
}

}  // namespace

GroupVarianceReport group_variance(const Corpus& corpus, VarianceMode mode) {
    const WitnessTable table = prepare_witnesses(corpus);
    const auto groups = version_groups(table);

    GroupVarianceReport report;
    report.mode = mode;
    for (const auto& [version, members] : groups) {
        Rational var = 0;
        if (mode == VarianceMode::per_line_sum) {
            for (std::size_t pos = 0; pos < table.positions; ++pos) {
                std::vector<std::u32string> lines;
                lines.reserve(members.size());
                for (const std::size_t m : members)
                    lines.push_back(table.selected[m][pos]);
                var += frechet_variance(lines);
            }
        } else {
            std::vector<std::u32string> texts;
            texts.reserve(members.size());
            for (const std::size_t m : members) texts.push_back(table.joined[m]);
            var = frechet_variance(texts);
        }
        report.variances[version] = var;
        report.group_sizes[version] = members.size();
    }
    return report;
}

std::pair<Rational, Rational> variance_ratios(const GroupVarianceReport& report) {
    for (const Version v : {Version::A, Version::B, Version::C})
        if (!report.variances.contains(v))
            throw DataError(std::string("empty version group: ") +
                            version_letter(v));
    const Rational& var_a = report.variances.at(Version::A);
    const Rational& var_b = report.variances.at(Version::B);
    const Rational& var_c = report.variances.at(Version::C);
    if (var_b == 0) throw DataError("degenerate denominator: Var(B) = 0");
    return {var_a / var_b, var_c / var_b};
}

// ---------------------------------------------------------------------------
// Randomization test

namespace {

// Unnormalized group sums: for each version, sum over positions of
// min_c sum_i d(c, i)^2 within the group. Distances come from precomputed
// matrices, so a replicate only re-indexes rows.
struct GroupSums {
    std::array<unsigned __int128, 3> sum{};
    std::array<std::size_t, 3> size{};
};

GroupSums group_powered_sums(std::span<const DistanceMatrix> matrices,
                             std::span<const Version> labels) {
    std::array<std::vector<std::size_t>, 3> members;
    for (std::size_t i = 0; i < labels.size(); ++i)
        members[static_cast<std::size_t>(labels[i])].push_back(i);

    GroupSums sums;
    for (std::size_t g = 0; g < 3; ++g) {
        sums.size[g] = members[g].size();
        for (const DistanceMatrix& dm : matrices) {
            unsigned __int128 best = 0;
            bool have = false;
            for (const std::size_t c : members[g]) {
                unsigned __int128 s = 0;
                for (const std::size_t i : members[g]) {
                    const std::uint64_t d = dm.at(c, i);
                    s += static_cast<unsigned __int128>(d) * d;
                }
                if (!have || s < best) { best = s; have = true; }
            }
            sums.sum[g] += best;
        }
    }
    return sums;
}

Rational group_variance_from_sums(const GroupSums& sums, std::size_t g) {
    return Rational(bigint_from_u128(sums.sum[g]), BigInt(sums.size[g]));
}

}  // namespace

RandTestReport randomization_test(const Corpus& corpus, std::size_t R,
                                  std::uint64_t seed, VarianceMode mode,
                                  unsigned threads) {
    if (R < 1) throw DataError("randomization_test: R must be >= 1");

    const WitnessTable table = prepare_witnesses(corpus);
    const std::size_t n = table.ids.size();

    std::vector<Version> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!table.versions[i])
            throw DataError("witness " + table.ids[i] + " has no version label");
        labels.push_back(*table.versions[i]);
    }
    for (const Version v : {Version::A, Version::B, Version::C})
        if (std::count(labels.begin(), labels.end(), v) == 0)
            throw DataError(std::string("empty version group: ") +
                            version_letter(v));

    // One matrix per selected position, or one over the joined texts.
    std::vector<DistanceMatrix> matrices;
    if (mode == VarianceMode::per_line_sum) {
        for (std::size_t pos = 0; pos < table.positions; ++pos) {
            std::vector<std::u32string> lines;
            lines.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                lines.push_back(table.selected[i][pos]);
            matrices.push_back(
                distance_matrix(lines, table.ids, EditCosts{}, threads));
        }
    } else {
        matrices.push_back(
            distance_matrix(table.joined, table.ids, EditCosts{}, threads));
    }

    const auto observed = group_powered_sums(matrices, labels);
    const auto b = static_cast<std::size_t>(Version::B);
    if (observed.sum[b] == 0)
        throw DataError("randomization_test: observed Var(B) is zero");

    RandTestReport report;
    report.mode = mode;
    report.seed = seed;
    report.num_replicates = R;
    const Rational obs_var_b = group_variance_from_sums(observed, b);
    report.observed_r_a =
        group_variance_from_sums(observed, static_cast<std::size_t>(Version::A)) /
        obs_var_b;
    report.observed_r_c =
        group_variance_from_sums(observed, static_cast<std::size_t>(Version::C)) /
        obs_var_b;

    report.replicates.resize(R);
    detail::parallel_for(R, threads, [&](std::size_t r) {
        std::mt19937_64 rng(splitmix64_at(seed, r));
        std::vector<Version> permuted = labels;
        shuffle_values(permuted, rng);
        const auto sums = group_powered_sums(matrices, permuted);
        ReplicateRatios& rep = report.replicates[r];
        if (sums.sum[b] == 0) {
            rep.degenerate = true;
            return;
        }
        const Rational var_b = group_variance_from_sums(sums, b);
        rep.r_a = group_variance_from_sums(
                      sums, static_cast<std::size_t>(Version::A)) / var_b;
        rep.r_c = group_variance_from_sums(
                      sums, static_cast<std::size_t>(Version::C)) / var_b;
    });

    for (const ReplicateRatios& rep : report.replicates) {
        if (rep.degenerate) {
            ++report.degenerate_count;
            continue;
        }
        if (rep.r_a > report.observed_r_a && rep.r_c > report.observed_r_c)
            ++report.exceedance_count;
    }
    report.p_value = Rational(BigInt(report.exceedance_count), BigInt(R));
    return report;
}

// ---------------------------------------------------------------------------
// k-medoids (PAM)

namespace {

struct PointAssignment {
    std::vector<std::size_t> cluster;
    std::vector<std::uint64_t> dist;
    std::uint64_t total = 0;
};

// Nearest medoid per point; ties go to the lowest cluster index. A medoid
// point always belongs to its own cluster (two medoids can coincide when the
// data holds duplicate strings).
PointAssignment assign_points(const DistanceMatrix& dm,
                              std::span<const std::size_t> medoids) {
    const std::size_t n = dm.size();
    PointAssignment out;
    out.cluster.resize(n);
    out.dist.resize(n);
    std::vector<std::size_t> own(n, medoids.size());
    for (std::size_t c = 0; c < medoids.size(); ++c) own[medoids[c]] = c;
    for (std::size_t j = 0; j < n; ++j) {
        if (own[j] != medoids.size()) {
            out.cluster[j] = own[j];
            out.dist[j] = 0;
            continue;
        }
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        std::size_t best_cluster = 0;
        for (std::size_t c = 0; c < medoids.size(); ++c) {
            const std::uint64_t d = dm.at(j, medoids[c]);
            if (d < best) { best = d; best_cluster = c; }
        }
        out.cluster[j] = best_cluster;
        out.dist[j] = best;
        out.total += best;
    }
    return out;
}

std::uint64_t swap_total(const DistanceMatrix& dm,
                         std::vector<std::size_t>& medoids, std::size_t slot,
                         std::size_t candidate) {
    const std::size_t keep = medoids[slot];
    medoids[slot] = candidate;
    const std::uint64_t total = assign_points(dm, medoids).total;
    medoids[slot] = keep;
    return total;
}

// Greedy BUILD: start from the point with the least total distance, then
// repeatedly add the candidate that lowers the assignment total the most.
// All ties resolve to the lowest point index.
std::vector<std::size_t> build_init(const DistanceMatrix& dm, std::size_t k) {
    const std::size_t n = dm.size();
    std::vector<std::size_t> medoids;
    medoids.reserve(k);

    std::size_t first = 0;
    std::uint64_t first_total = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < n; ++i) total += dm.at(j, i);
        if (total < first_total) { first_total = total; first = j; }
    }
    medoids.push_back(first);

    std::vector<std::uint64_t> nearest(n);
    for (std::size_t j = 0; j < n; ++j) nearest[j] = dm.at(j, first);

    std::vector<bool> is_medoid(n, false);
    is_medoid[first] = true;
    while (medoids.size() < k) {
        std::size_t best_candidate = n;
        std::uint64_t best_total = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t x = 0; x < n; ++x) {
            if (is_medoid[x]) continue;
            std::uint64_t total = 0;
            for (std::size_t j = 0; j < n; ++j)
                total += std::min(nearest[j], dm.at(j, x));
            if (total < best_total) { best_total = total; best_candidate = x; }
        }
        medoids.push_back(best_candidate);
        is_medoid[best_candidate] = true;
        for (std::size_t j = 0; j < n; ++j)
            nearest[j] = std::min(nearest[j], dm.at(j, best_candidate));
    }
    return medoids;
}

// Best-improvement SWAP until no exchange lowers the total; ties keep the
// first (medoid slot, candidate) in scan order.
PamResult swap_descend(const DistanceMatrix& dm,
                       std::vector<std::size_t> medoids) {
    const std::size_t n = dm.size();
    PamResult result;

    std::uint64_t current = assign_points(dm, medoids).total;
    result.objective_trace.push_back(current);

    std::vector<bool> is_medoid(n, false);
    for (const std::size_t m : medoids) is_medoid[m] = true;

    for (;;) {
        std::uint64_t best_total = current;
        std::size_t best_slot = n, best_candidate = n;
        for (std::size_t slot = 0; slot < medoids.size(); ++slot) {
            for (std::size_t x = 0; x < n; ++x) {
                if (is_medoid[x]) continue;
                const std::uint64_t total = swap_total(dm, medoids, slot, x);
                if (total < best_total) {
                    best_total = total;
                    best_slot = slot;
                    best_candidate = x;
                }
            }
        }
        if (best_slot == n) break;
        is_medoid[medoids[best_slot]] = false;
        is_medoid[best_candidate] = true;
        medoids[best_slot] = best_candidate;
        current = best_total;
        result.objective_trace.push_back(current);
    }

    std::sort(medoids.begin(), medoids.end());
    const PointAssignment final_assignment = assign_points(dm, medoids);
    result.medoids = std::move(medoids);
    result.assignment = final_assignment.cluster;
    result.objective = final_assignment.total;
    return result;
}

}  // namespace

PamResult pam(const DistanceMatrix& dm, std::size_t k) {
    if (dm.size() == 0) throw DataError("pam: empty distance matrix");
    if (k < 1 || k > dm.size())
        throw DataError("pam: k out of range (have " + count_str(dm.size()) +
                        " points, k = " + count_str(k) + ")");
    return swap_descend(dm, build_init(dm, k));
}

Clustering cluster_witnesses(const Corpus& corpus, std::size_t k,
                             std::uint64_t seed, unsigned restarts) {
    const WitnessTable table = prepare_witnesses(corpus);
    const std::size_t n = table.ids.size();
    if (n < 2)
        throw DataError("cluster_witnesses: need at least 2 included witnesses");
    if (k < 1 || k > n)
        throw DataError("cluster_witnesses: k out of range (1.." + count_str(n) +
                        ", k = " + count_str(k) + ")");

    const DistanceMatrix dm = distance_matrix(table.joined, table.ids);
    PamResult best = pam(dm, k);
    for (unsigned r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(splitmix64_at(seed, r));
        std::vector<std::size_t> points(n);
        for (std::size_t i = 0; i < n; ++i) points[i] = i;
        shuffle_values(points, rng);
        points.resize(k);
        PamResult candidate = swap_descend(dm, std::move(points));
        if (candidate.objective < best.objective) best = std::move(candidate);
    }

    Clustering clustering;
    clustering.k = k;
    clustering.objective = best.objective;
    clustering.objective_trace = std::move(best.objective_trace);
    for (const std::size_t m : best.medoids)
        clustering.medoids.push_back(table.ids[m]);
    for (std::size_t i = 0; i < n; ++i)
        clustering.assignments[table.ids[i]] = best.assignment[i];
    return clustering;
}

}  // namespace editstat
