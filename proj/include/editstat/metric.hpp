#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace editstat {

// Costs of the three edit operations. Unit costs give the classical
// Levenshtein distance. substitute_cost <= insert_cost + delete_cost is
// needed for metric behavior, insert_cost == delete_cost for symmetry.
struct EditCosts {
    std::uint64_t insert_cost = 1;
    std::uint64_t delete_cost = 1;
    std::uint64_t substitute_cost = 1;

    bool symmetric() const noexcept { return insert_cost == delete_cost; }
    bool metric() const noexcept {
        return symmetric() && substitute_cost <= insert_cost + delete_cost;
    }
};

// Minimal total cost of edits transforming a into b. The edit unit is the
// Unicode scalar value, so yogh and thorn count as single symbols.
// Case-sensitive; case folding is a corpus-level normalization.
std::uint64_t edit_distance(std::u32string_view a, std::u32string_view b,
                            const EditCosts& costs = {});

// UTF-8 convenience overload; throws DataError on invalid input bytes.
std::uint64_t edit_distance(std::string_view a_utf8, std::string_view b_utf8,
                            const EditCosts& costs = {});

// Symmetric matrix of pairwise distances together with the item list that
// indexes it.
class DistanceMatrix {
public:
    DistanceMatrix(std::vector<std::string> items,
                   std::vector<std::uint64_t> values);

    std::size_t size() const noexcept { return items_.size(); }
    const std::vector<std::string>& items() const noexcept { return items_; }

    std::uint64_t at(std::size_t i, std::size_t j) const {
        return values_[i * items_.size() + j];
    }

    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

private:
    std::vector<std::string> items_;
    std::vector<std::uint64_t> values_;  // row-major, size() x size()
};

// Full pairwise matrix; entry (i, j) equals edit_distance(items[i], items[j]).
// Cells may be computed in parallel (threads = 0 picks a sensible default);
// the result is identical regardless of the degree of parallelism. Rejects
// empty item sequences and asymmetric costs.
DistanceMatrix distance_matrix(std::span<const std::string> items,
                               const EditCosts& costs = {},
                               unsigned threads = 0);

// Pre-decoded variant used by the analysis layer; labels become the item
// list of the returned matrix and must parallel `items`.
DistanceMatrix distance_matrix(std::span<const std::u32string> items,
                               std::vector<std::string> labels,
                               const EditCosts& costs = {},
                               unsigned threads = 0);

}  // namespace editstat
