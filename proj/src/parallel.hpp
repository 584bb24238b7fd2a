#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace editstat::detail {

// Runs fn(i) for every i in [0, n). With more than one thread, indices are
// striped across workers; each index is processed exactly once, so output
// written to per-index slots is identical for any thread count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    unsigned t = threads != 0 ? threads : std::thread::hardware_concurrency();
    t = static_cast<unsigned>(std::min<std::size_t>(t == 0 ? 1 : t, n));
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(t);
    workers.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += t) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace editstat::detail
