#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace cks {

// 0 means "use all hardware threads".
inline std::size_t resolve_threads(std::size_t requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<std::size_t>(hw);
}

// Runs fn(i) for i in [0, n). Iterations must write to disjoint state; under
// that contract the result is identical for every thread count.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = n;

    const std::size_t grain = std::max<std::size_t>(1, n / (threads * 8));
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&]() {
        try {
            for (;;) {
                const std::size_t begin = cursor.fetch_add(grain, std::memory_order_relaxed);
                if (begin >= n) return;
                const std::size_t end = std::min(begin + grain, n);
                for (std::size_t i = begin; i < end; ++i) fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace cks
