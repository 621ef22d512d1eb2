#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclocode {

/// 0 means auto: CYCLOCODE_THREADS if set and positive, else hardware concurrency.
unsigned resolve_thread_count(unsigned requested) noexcept;

/// Number of slices parallel_slices will use for `count` items.
inline std::size_t planned_workers(std::size_t count, unsigned threads) noexcept {
    return std::max<std::size_t>(1, std::min<std::size_t>(resolve_thread_count(threads), count));
}

/// Splits [0, count) into planned_workers(count, threads) contiguous slices
/// and runs fn(begin, end, slot) for each on its own thread. Callers keep one
/// accumulator per slot and merge afterwards.
template <class Fn>
void parallel_slices(std::size_t count, unsigned threads, Fn&& fn) {
    const std::size_t workers = planned_workers(count, threads);
    if (workers == 1) {
        fn(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            pool.emplace_back([&, begin, end, w] {
                try {
                    fn(begin, end, w);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace cyclocode
