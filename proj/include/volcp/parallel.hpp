#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace volcp {

// Runs body(i) for i in [0, count). Work is claimed through an atomic counter,
// so each index runs exactly once regardless of worker count; callers must make
// body(i) depend only on i (derive per-index seeds, write to slot i) so results
// are identical for any `workers`.
inline void parallel_for(std::int64_t count, int workers, const std::function<void(std::int64_t)>& body) {
    if (count <= 0) return;
    if (workers <= 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::scoped_lock lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = workers;
    if (static_cast<std::int64_t>(nthreads) > count) nthreads = static_cast<int>(count);
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace volcp
