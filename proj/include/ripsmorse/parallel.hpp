#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ripsmorse {

// Runs fn(i) for i in [0, n) on `jobs` threads. Callers store results
// indexed by i and merge sequentially afterwards, so output never depends
// on the thread count or scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = jobs < static_cast<int>(n) ? jobs : static_cast<int>(n);
    pool.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace ripsmorse
