#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tl {

/// Worker cap: TL_THREADS if set (>= 1), else the hardware count, at most 8.
inline unsigned worker_count() {
    if (const char* env = std::getenv("TL_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1)
            return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    return hw > 8 ? 8 : hw;
}

/// Runs fn(begin, end) over a partition of [0, n) on up to worker_count()
/// threads. fn must only touch state owned by its own index range.
inline void parallel_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 2048) {
        fn(0, n);
        return;
    }
    if (workers > n)
        workers = static_cast<unsigned>(n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end)
            break;
        threads.emplace_back(fn, begin, end);
    }
    for (auto& t : threads)
        t.join();
}

}  // namespace tl
