#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sptree {

/// 0 means "all hardware threads".
inline std::size_t resolve_threads(std::size_t requested) noexcept {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into `threads` contiguous chunks and runs
/// fn(chunk, begin, end) for each, one thread per chunk. Chunk boundaries
/// depend only on (count, threads). The first exception thrown is rethrown.
template <class Fn>
void parallel_chunks(std::size_t count, std::size_t threads, Fn&& fn) {
    threads = std::max<std::size_t>(1, std::min(resolve_threads(threads), count));
    if (threads == 1) {
        fn(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = count * t / threads;
            const std::size_t end = count * (t + 1) / threads;
            pool.emplace_back([&, t, begin, end] {
                try {
                    fn(t, begin, end);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

/// Number of chunks parallel_chunks will use for (count, threads).
inline std::size_t chunk_count(std::size_t count, std::size_t threads) noexcept {
    return std::max<std::size_t>(1, std::min(resolve_threads(threads), count));
}

}  // namespace sptree

#include <atomic>

namespace sptree {

/// Runs fn(i) for i in [0, count) on a pool of `threads` workers pulling
/// indices from a shared counter. Output placement is up to fn; the first
/// exception thrown is rethrown after all workers stop.
template <class Fn>
void parallel_tasks(std::size_t count, std::size_t threads, Fn&& fn) {
    threads = std::max<std::size_t>(1, std::min(resolve_threads(threads), count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = next++; i < count && !failed; i = next++) fn(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                    failed = true;
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace sptree
