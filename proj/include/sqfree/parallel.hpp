#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sqfree {

// Runs fn(i) for i in [0, chunks) on up to `jobs` threads. Chunk indices are
// handed out atomically; callers keep per-index result slots and reduce them
// in index order afterwards, so the combined result never depends on the
// worker count or scheduling. The first exception thrown by any chunk is
// rethrown after all workers join.
inline void parallel_for(std::size_t chunks, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (chunks == 0) return;
    if (jobs <= 1 || chunks == 1) {
        for (std::size_t i = 0; i < chunks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= chunks) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(jobs, chunks);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace sqfree
