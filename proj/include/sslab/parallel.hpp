#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sslab {

// Worker count: explicit request, else SHELLSORT_LAB_THREADS, else hardware.
int effective_threads(int requested = 0);

// Runs fn(index) for index in [0, count) on a small worker pool. fn must write
// only to its own slot; iteration order is unspecified but results must not
// depend on it. The first exception thrown by fn is rethrown to the caller.
template <typename Fn>
void parallel_for(uint64_t count, int threads, Fn&& fn) {
    threads = effective_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const int spawn =
            static_cast<int>(std::min<uint64_t>(count, static_cast<uint64_t>(threads)));
        pool.reserve(static_cast<size_t>(spawn));
        for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace sslab
