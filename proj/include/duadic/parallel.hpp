#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace duadic {

// Worker cap: DUADIC_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(begin, end) on disjoint contiguous chunks covering [0, count).
// Chunk boundaries depend only on count and the worker cap; callers that
// reduce results must do so in chunk order to stay deterministic.
template <class Body>
void parallel_chunks(std::size_t count, Body&& body, unsigned max_workers = 0) {
    unsigned workers = max_workers ? std::min(max_workers, worker_count()) : worker_count();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        if (count) body(std::size_t{0}, count);
        return;
    }
    const std::size_t step = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        std::size_t slot = 0;
        for (std::size_t begin = 0; begin < count; begin += step, ++slot) {
            const std::size_t end = std::min(count, begin + step);
            pool.emplace_back([&body, &errors, slot, begin, end] {
                try {
                    body(begin, end);
                } catch (...) {
                    errors[slot] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace duadic
