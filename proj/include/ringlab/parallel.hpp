#pragma once

/**
 * @file parallel.hpp
 *
 * Index-partitioned worker pools for exhaustive scans.
 *
 * Scans split their outermost loop into independent tasks. Workers pull task
 * indices from a shared counter in increasing order, so every task below the
 * smallest failing task is guaranteed to have run to completion. That makes
 * "first witness" queries deterministic regardless of the worker count.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ringlab::parallel {

/// 0 means "use the available hardware parallelism".
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

template <class Worker>
void run_workers(unsigned workers, std::size_t count, Worker&& worker) {
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), count));
    if (n <= 1) {
        worker();
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned w = 0; w < n; ++w) {
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/**
 * Runs `body(i)` for task indices i in [0, count) and returns the result of the
 * smallest i for which `body` produced a value. Tasks above an already-found
 * failure are skipped.
 */
template <class Witness, class Body>
std::optional<Witness> find_first(std::size_t count, unsigned workers, Body&& body) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::optional<Witness> result;
    std::mutex result_mutex;

    detail::run_workers(workers, count, [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || i >= best.load(std::memory_order_acquire)) return;
            std::optional<Witness> found = body(i);
            if (!found) continue;
            std::lock_guard lock(result_mutex);
            if (i < best.load(std::memory_order_relaxed)) {
                best.store(i, std::memory_order_release);
                result = std::move(found);
            }
        }
    });
    return result;
}

/// Runs `body(i)` for every i in [0, count); no early exit.
template <class Body>
void for_each_index(std::size_t count, unsigned workers, Body&& body) {
    std::atomic<std::size_t> next{0};
    detail::run_workers(workers, count, [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            body(i);
        }
    });
}

}  // namespace ringlab::parallel
