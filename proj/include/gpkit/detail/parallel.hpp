#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace gpkit::detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers keep
/// results in pre-sized slots indexed by i, so aggregation order does not
/// depend on scheduling.
template <typename Fn>
void parallel_for(long count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    int workers = static_cast<int>(jobs < count ? jobs : count);
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace gpkit::detail
