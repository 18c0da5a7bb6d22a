#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace tc {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(worker, begin, end) over [0, n) in contiguous chunks. Workers get
// stable ids in [0, workers()); callers must only write to disjoint,
// index-addressed slots so results are independent of scheduling.
template <class Body>
void parallel_chunks(std::uint64_t n, int jobs, Body&& body) {
    jobs = resolve_jobs(jobs);
    if (n == 0) return;
    const std::uint64_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), n);
    if (workers <= 1) {
        body(0, std::uint64_t{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&body, w, begin, end] { body(static_cast<int>(w), begin, end); });
    }
    for (auto& t : threads) t.join();
}

// Work-pulling variant for uneven per-index costs; body(worker, i).
template <class Body>
void parallel_indexed(std::uint64_t n, int jobs, Body&& body) {
    jobs = resolve_jobs(jobs);
    if (n == 0) return;
    const std::uint64_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), n);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) body(0, i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        threads.emplace_back([&next, &body, n, w] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) return;
                body(static_cast<int>(w), i);
            }
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace tc
