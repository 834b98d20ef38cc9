// parallel.hpp -- index-space fan-out over a fixed thread count.  The job
// count comes from THREEFOLD_JOBS (default: hardware concurrency).  Work
// items must be independent; results are written by index, so output order
// is deterministic.

#ifndef THREEFOLD_PARALLEL_HPP
#define THREEFOLD_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace threefold {

inline unsigned parallel_jobs() {
    if (const char* env = std::getenv("THREEFOLD_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
    unsigned jobs = parallel_jobs();
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    unsigned spawn = jobs < count ? jobs : static_cast<unsigned>(count);
    for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace threefold

#endif
