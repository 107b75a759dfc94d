#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zft {

inline int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Calls f(i) for i in [0, count) on up to `workers` threads. The first
/// exception thrown by any call is rethrown after all threads stop.
template <class F>
void parallel_for(std::size_t count, int workers, F&& f) {
    const std::size_t threads = std::min<std::size_t>(std::max(1, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        while (!failed) {
            const std::size_t i = next++;
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    pool.clear();
    if (error) std::rethrow_exception(error);
}

/// results[i] = f(i), computed in parallel; order is by index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int workers, F&& f) {
    std::vector<T> out(count);
    parallel_for(count, workers, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

} // namespace zft
