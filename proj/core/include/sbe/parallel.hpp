// Deterministic ensemble parallelism: indices are partitioned into
// contiguous blocks over a fixed worker count, each worker writes only its
// own preassigned slots, and callers reduce in index order afterwards. The
// SBELAB_THREADS environment variable caps the worker count.
#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sbe {

inline unsigned worker_count(size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SBELAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = unsigned(v);
    }
    if (jobs < hw) hw = unsigned(jobs);
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, jobs); rethrows the first worker exception.
template <typename Fn>
void parallel_for(size_t jobs, Fn&& fn) {
    unsigned workers = worker_count(jobs);
    if (workers <= 1) {
        for (size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            size_t lo = jobs * w / workers, hi = jobs * (w + 1) / workers;
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sbe
