#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace twistforge {

// Thread budget: TWISTFORGE_THREADS caps the fan-out (default: hardware).
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("TWISTFORGE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(1024)) return static_cast<unsigned>(v);
    }
    return hw;
}

// Runs fn(0..n-1) on up to thread_budget() threads. Callers keep output
// deterministic by writing into index-addressed slots and merging in order.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    unsigned workers = thread_budget();
    if (workers > n) workers = static_cast<unsigned>(n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace twistforge
