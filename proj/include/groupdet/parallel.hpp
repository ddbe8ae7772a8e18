#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace groupdet {

// Worker count used by parallel_map; 1 runs everything on the calling thread.
void set_default_jobs(unsigned jobs);
unsigned default_jobs();

// out[i] = fn(i) for i in [0, n). Results are placed by index, so the output
// does not depend on scheduling. The first exception thrown is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, Fn&& fn, unsigned jobs = default_jobs()) {
    using Out = decltype(fn(std::size_t{0}));
    std::vector<Out> out(n);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace groupdet
