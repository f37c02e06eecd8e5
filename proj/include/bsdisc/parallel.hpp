#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bsdisc {

/// Thread count to use: `requested` if nonzero, else the BSDISC_THREADS
/// environment variable, else std::thread::hardware_concurrency().
unsigned resolve_threads(unsigned requested);

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(begin, end) on each. Callers write results into preallocated slots
/// indexed by position, so the merged output does not depend on `threads`.
/// The first exception thrown by a worker is rethrown on the caller.
template <class Body>
void parallel_chunks(std::size_t count, unsigned threads, Body &&body)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        body(std::size_t{0}, count);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    const std::size_t step = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * step;
        const std::size_t end = std::min(count, begin + step);
        pool.emplace_back([&, w, begin, end] {
            try {
                if (begin < end) body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) t.join();
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace bsdisc
