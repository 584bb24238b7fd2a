#pragma once

#include "editstat/metric.hpp"
#include "editstat/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace editstat {

// All candidates attaining the minimum of f(c) = (1/n) sum_i d(x_i, c)^p,
// together with that minimum. Ties are preserved: minimizers is non-empty
// and sorted by code point.
struct FrechetResult {
    std::vector<std::string> minimizers;
    Rational objective;
    unsigned power = 2;
};

// Sorted unique values of a multiset; the default candidate pool ("attested"
// convention: only strings that occur in the data).
std::vector<std::string> support(std::span<const std::string> data);

// f(c) over the data multiset. power = 2 gives the squared objective whose
// minimum is the variance; power = 1 the median/mean-absolute-deviation
// analogue. Exact rational arithmetic throughout.
Rational objective_at(std::string_view candidate,
                      std::span<const std::string> data, unsigned power,
                      const EditCosts& costs = {}, bool normalized = true);

// Scans every candidate and returns all minimizers of f. Callers usually
// pass candidates = support(data) but may supply a larger attested pool.
FrechetResult frechet_minimizers(std::span<const std::string> data,
                                 std::span<const std::string> candidates,
                                 unsigned power, const EditCosts& costs = {},
                                 bool normalized = true);

// Minimum of the normalized power-2 objective over support(data).
Rational frechet_variance(std::span<const std::string> data,
                          const EditCosts& costs = {});

// Pre-decoded variants used by the analysis layer.
Rational frechet_variance(std::span<const std::u32string> data,
                          const EditCosts& costs = {});
FrechetResult frechet_minimizers(std::span<const std::u32string> data,
                                 std::span<const std::u32string> candidates,
                                 unsigned power, const EditCosts& costs = {},
                                 bool normalized = true);

// Kernel over a precomputed matrix: minimize sum_{i in data} d(c, x_i)^power
// over candidate rows c. Returns the positions (into `candidates`) of all
// minimizers and the unnormalized minimum.
struct IndexedMinimum {
    std::vector<std::size_t> minimizers;
    BigInt min_powered_sum;
};
IndexedMinimum minimize_powered_sum(const DistanceMatrix& dm,
                                    std::span<const std::size_t> data,
                                    std::span<const std::size_t> candidates,
                                    unsigned power);

}  // namespace editstat
