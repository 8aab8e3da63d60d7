#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pilotcoex {

inline unsigned worker_count() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// body(begin, end, chunk) concurrently. The chunk layout depends only on n
/// and the worker count; results that must not depend on the layout should
/// be keyed by index, not by chunk. The first exception thrown by any chunk
/// is rethrown after all workers join.
template <typename Body>
void parallel_chunks(std::size_t n, Body&& body) {
    const std::size_t chunks = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    if (chunks <= 1) {
        body(std::size_t{0}, n, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    {
        std::vector<std::jthread> workers;
        workers.reserve(chunks);
        for (std::size_t c = 0; c < chunks; ++c) {
            const std::size_t begin = n * c / chunks;
            const std::size_t end = n * (c + 1) / chunks;
            workers.emplace_back([&, begin, end, c] {
                try {
                    body(begin, end, c);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace pilotcoex
