#pragma once

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace treedeg {

// Worker count: explicit request > 0 wins, else TREEDEG_JOBS, else hardware.
inline int default_jobs(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TREEDEG_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v < 1024) return int(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Splits [0, count) into at most `jobs` contiguous chunks and runs
// fn(chunk_index, begin, end) on each, one thread per chunk. Results must be
// aggregated per chunk index by the caller so the outcome is deterministic
// regardless of scheduling. The first thrown exception (lowest chunk index)
// is rethrown after all threads join.
template <typename F>
void parallel_chunks(std::size_t count, int jobs, F&& fn) {
    std::size_t nchunks = std::size_t(default_jobs(jobs));
    if (nchunks > count) nchunks = count;
    if (nchunks <= 1) {
        if (count > 0) fn(std::size_t(0), std::size_t(0), count);
        return;
    }
    std::vector<std::exception_ptr> errs(nchunks);
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    std::size_t base = count / nchunks, extra = count % nchunks, begin = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        std::size_t end = begin + len;
        pool.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                errs[c] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace treedeg
