#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace lbcnn {

namespace detail {
inline std::atomic<int>& thread_count_slot() {
    static std::atomic<int> count{1};
    return count;
}
}  // namespace detail

inline int thread_count() { return detail::thread_count_slot().load(); }

inline void set_thread_count(int n) { detail::thread_count_slot().store(n < 1 ? 1 : n); }

/// Runs fn(i) for i in [0, n). With more than one thread the index range
/// is split into contiguous chunks, one chunk per worker; each index is
/// still processed exactly once, so any computation whose outputs are
/// disjoint per index produces the same result for every thread count.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn) {
    const int workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const int used = static_cast<int>(std::min<std::int64_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(used));
    const std::int64_t chunk = (n + used - 1) / used;
    for (int w = 0; w < used; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
        pool.emplace_back([lo, hi, &fn] {
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace lbcnn
