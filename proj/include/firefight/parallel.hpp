#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace firefight {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) {
        return jobs;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, count) on up to `jobs` threads. Work is handed out
/// by index, so results written to slot i do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    int workers = std::min<int>(resolve_jobs(jobs), static_cast<int>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++) {
                fn(i);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = count;
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Seed for independent stream i derived from a base seed (stream 0 keeps the base).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    if (stream == 0) {
        return base;
    }
    std::uint64_t z = base + stream * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace firefight
