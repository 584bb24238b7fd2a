#include "editstat/metric.hpp"

#include "editstat/error.hpp"
#include "editstat/unicode.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <utility>

namespace editstat {

std::uint64_t edit_distance(std::u32string_view a, std::u32string_view b,
                            const EditCosts& costs) {
    if (a == b) return 0;

    // Two-row recurrence. row[j] holds the cost of transforming the first i
    // symbols of a into the first j symbols of b.
    std::vector<std::uint64_t> row(b.size() + 1);
    row[0] = 0;
    for (std::size_t j = 1; j <= b.size(); ++j)
        row[j] = row[j - 1] + costs.insert_cost;

    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::uint64_t diag = row[0];
        row[0] += costs.delete_cost;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::uint64_t keep = row[j];
            const std::uint64_t sub =
                diag + (a[i - 1] == b[j - 1] ? 0 : costs.substitute_cost);
            row[j] = std::min({keep + costs.delete_cost,
                               row[j - 1] + costs.insert_cost, sub});
            diag = keep;
        }
    }
    return row[b.size()];
}

std::uint64_t edit_distance(std::string_view a_utf8, std::string_view b_utf8,
                            const EditCosts& costs) {
    return edit_distance(decode_utf8(a_utf8), decode_utf8(b_utf8), costs);
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> items,
                               std::vector<std::uint64_t> values)
    : items_(std::move(items)), values_(std::move(values)) {
    if (values_.size() != items_.size() * items_.size())
        throw DataError("distance matrix shape does not match its item list");
}

namespace {

DistanceMatrix matrix_from_scalars(std::span<const std::u32string> items,
                                   std::vector<std::string> labels,
                                   const EditCosts& costs, unsigned threads) {
    if (items.empty())
        throw DataError("distance_matrix: empty item sequence");
    if (!costs.symmetric())
        throw DataError(
            "distance_matrix: insert and delete costs differ; the matrix "
            "would not be symmetric");

    const std::size_t n = items.size();
    std::vector<std::uint64_t> values(n * n, 0);
    detail::parallel_for(n, threads, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t d = edit_distance(items[i], items[j], costs);
            values[i * n + j] = d;
            values[j * n + i] = d;
        }
    });
    return DistanceMatrix(std::move(labels), std::move(values));
}

}  // namespace

DistanceMatrix distance_matrix(std::span<const std::string> items,
                               const EditCosts& costs, unsigned threads) {
    std::vector<std::u32string> decoded;
    decoded.reserve(items.size());
    for (const auto& item : items) decoded.push_back(decode_utf8(item));
    return matrix_from_scalars(decoded,
                               std::vector<std::string>(items.begin(), items.end()),
                               costs, threads);
}

DistanceMatrix distance_matrix(std::span<const std::u32string> items,
                               std::vector<std::string> labels,
                               const EditCosts& costs, unsigned threads) {
    if (labels.size() != items.size())
        throw DataError("distance_matrix: label list does not match items");
    return matrix_from_scalars(items, std::move(labels), costs, threads);
}

}  // namespace editstat
