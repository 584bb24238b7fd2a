#include "editstat/frechet.hpp"

#include "editstat/error.hpp"
#include "editstat/unicode.hpp"

#include <algorithm>
#include <map>

namespace editstat {

namespace {

void check_power(unsigned power) {
    if (power == 0) throw DataError("power must be a positive integer");
}

BigInt powered(std::uint64_t d, unsigned power) {
    if (power == 1) return BigInt(d);
    if (power == 2) return BigInt(d) * d;
    BigInt out = 1;
    const BigInt base = d;
    for (unsigned i = 0; i < power; ++i) out *= base;
    return out;
}

// Multiset collapsed to (value, multiplicity) so repeated strings cost one
// distance computation.
std::vector<std::pair<std::u32string, std::uint64_t>> weighted_unique(
    std::span<const std::u32string> data) {
    std::map<std::u32string, std::uint64_t> counts;
    for (const auto& value : data) ++counts[value];
    return {counts.begin(), counts.end()};
}

BigInt powered_sum(const std::u32string& candidate,
                   std::span<const std::pair<std::u32string, std::uint64_t>> items,
                   unsigned power, const EditCosts& costs) {
    BigInt total = 0;
    for (const auto& [value, count] : items)
        total += powered(edit_distance(candidate, value, costs), power) * count;
    return total;
}

std::vector<std::u32string> decode_all(std::span<const std::string> values) {
    std::vector<std::u32string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(decode_utf8(v));
    return out;
}

}  // namespace

std::vector<std::string> support(std::span<const std::string> data) {
    std::vector<std::string> out(data.begin(), data.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational objective_at(std::string_view candidate,
                      std::span<const std::string> data, unsigned power,
                      const EditCosts& costs, bool normalized) {
    check_power(power);
    if (data.empty()) throw DataError("objective_at: empty data");
    const auto decoded = decode_all(data);
    const auto items = weighted_unique(decoded);
    const BigInt sum = powered_sum(decode_utf8(candidate), items, power, costs);
    if (!normalized) return Rational(sum);
    return Rational(sum, BigInt(data.size()));
}

FrechetResult frechet_minimizers(std::span<const std::u32string> data,
                                 std::span<const std::u32string> candidates,
                                 unsigned power, const EditCosts& costs,
                                 bool normalized) {
    check_power(power);
    if (data.empty()) throw DataError("frechet_minimizers: empty data");
    if (candidates.empty()) throw DataError("frechet_minimizers: empty candidates");

    const auto items = weighted_unique(data);

    // Scanning candidates in sorted order leaves ties sorted by scalar value,
    // which matches code-point order of the encoded strings.
    std::vector<std::u32string> pool(candidates.begin(), candidates.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    BigInt best = 0;
    std::vector<std::u32string> minimizers;
    for (const auto& candidate : pool) {
        const BigInt sum = powered_sum(candidate, items, power, costs);
        if (minimizers.empty() || sum < best) {
            best = sum;
            minimizers.assign(1, candidate);
        } else if (sum == best) {
            minimizers.push_back(candidate);
        }
    }

    FrechetResult result;
    result.power = power;
    result.objective = normalized ? Rational(best, BigInt(data.size()))
                                  : Rational(best);
    result.minimizers.reserve(minimizers.size());
    for (const auto& m : minimizers) result.minimizers.push_back(encode_utf8(m));
    return result;
}

FrechetResult frechet_minimizers(std::span<const std::string> data,
                                 std::span<const std::string> candidates,
                                 unsigned power, const EditCosts& costs,
                                 bool normalized) {
    const auto data32 = decode_all(data);
    const auto cand32 = decode_all(candidates);
    return frechet_minimizers(std::span<const std::u32string>(data32),
                              std::span<const std::u32string>(cand32), power,
                              costs, normalized);
}

Rational frechet_variance(std::span<const std::u32string> data,
                          const EditCosts& costs) {
    return frechet_minimizers(data, data, 2, costs, true).objective;
}

Rational frechet_variance(std::span<const std::string> data,
                          const EditCosts& costs) {
    const auto data32 = decode_all(data);
    return frechet_variance(std::span<const std::u32string>(data32), costs);
}

IndexedMinimum minimize_powered_sum(const DistanceMatrix& dm,
                                    std::span<const std::size_t> data,
                                    std::span<const std::size_t> candidates,
                                    unsigned power) {
    check_power(power);
    if (data.empty()) throw DataError("minimize_powered_sum: empty data");
    if (candidates.empty())
        throw DataError("minimize_powered_sum: empty candidates");

    IndexedMinimum out;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        BigInt sum = 0;
        for (const std::size_t i : data)
            sum += powered(dm.at(candidates[c], i), power);
        if (out.minimizers.empty() || sum < out.min_powered_sum) {
            out.min_powered_sum = sum;
            out.minimizers.assign(1, c);
        } else if (sum == out.min_powered_sum) {
            out.minimizers.push_back(c);
        }
    }
    return out;
}

}  // namespace editstat
