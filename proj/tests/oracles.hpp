#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive so they cannot share a bug with the library's
// two-row DP or its candidate scan.

#include "editstat/metric.hpp"
#include "editstat/rational.hpp"
#include "editstat/unicode.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace oracles {

// The recursive definition of the Levenshtein distance, unit costs.
// Exponential time; fine for the short strings the tests use.
inline std::uint64_t lev_recursive(std::u32string_view a, std::u32string_view b) {
    if (a.empty()) return b.size();
    if (b.empty()) return a.size();
    if (a.front() == b.front()) return lev_recursive(a.substr(1), b.substr(1));
    const std::uint64_t del = lev_recursive(a.substr(1), b);
    const std::uint64_t ins = lev_recursive(a, b.substr(1));
    const std::uint64_t sub = lev_recursive(a.substr(1), b.substr(1));
    return 1 + std::min({del, ins, sub});
}

// General-cost recursion without the equal-head shortcut; use only on tiny
// strings.
inline std::uint64_t lev_recursive_costs(std::u32string_view a,
                                         std::u32string_view b,
                                         const editstat::EditCosts& costs) {
    if (a.empty() && b.empty()) return 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    if (!a.empty())
        best = std::min(best, costs.delete_cost + lev_recursive_costs(a.substr(1), b, costs));
    if (!b.empty())
        best = std::min(best, costs.insert_cost + lev_recursive_costs(a, b.substr(1), costs));
    if (!a.empty() && !b.empty()) {
        const std::uint64_t sub = a.front() == b.front() ? 0 : costs.substitute_cost;
        best = std::min(best, sub + lev_recursive_costs(a.substr(1), b.substr(1), costs));
    }
    return best;
}

// Full-matrix DP, a second independent route for unit-cost distances.
inline std::uint64_t lev_full_matrix(std::u32string_view a, std::u32string_view b) {
    const std::size_t m = a.size(), n = b.size();
    std::vector<std::vector<std::uint64_t>> dp(m + 1,
                                               std::vector<std::uint64_t>(n + 1));
    for (std::size_t i = 0; i <= m; ++i) dp[i][0] = i;
    for (std::size_t j = 0; j <= n; ++j) dp[0][j] = j;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            dp[i][j] = std::min({dp[i - 1][j] + 1, dp[i][j - 1] + 1,
                                 dp[i - 1][j - 1] +
                                     (a[i - 1] == b[j - 1] ? 0 : 1)});
    return dp[m][n];
}

// Direct evaluation of sum_i d(x_i, c)^p through the full-matrix DP.
inline editstat::BigInt powered_sum_direct(const std::u32string& candidate,
                                           const std::vector<std::u32string>& data,
                                           unsigned power) {
    editstat::BigInt total = 0;
    for (const auto& x : data) {
        editstat::BigInt term = 1;
        const std::uint64_t d = lev_full_matrix(candidate, x);
        for (unsigned i = 0; i < power; ++i) term *= d;
        total += term;
    }
    return total;
}

inline std::u32string random_string(std::mt19937_64& rng,
                                    std::u32string_view alphabet,
                                    std::size_t max_len) {
    const std::size_t len = rng() % (max_len + 1);
    std::u32string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(alphabet[rng() % alphabet.size()]);
    return out;
}

// Alphabet used by the property suites; includes yogh and thorn.
inline constexpr std::u32string_view kAlphabet = U"abcȝþ";

// Every string of length <= max_len over the given alphabet.
inline std::vector<std::u32string> all_strings(std::u32string_view alphabet,
                                               std::size_t max_len) {
    std::vector<std::u32string> out{U""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const char32_t c : alphabet) out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

}  // namespace oracles
