#pragma once

#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bergman {

// Deterministic indexed map: every slot is computed independently and
// stored by index, so results are identical for any thread count.
inline void parallel_for_indexed(size_t count, int threads,
                                 const std::function<void(size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
        while (true) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= count) return;
                i = next++;
            }
            fn(i);
        }
    };
    int nthreads = std::min<size_t>(size_t(threads), count);
    pool.reserve(size_t(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Thread-count override from the environment (the only runtime knob).
inline int env_thread_count(const char* var = "BERGMAN_BALL_THREADS") {
    const char* v = std::getenv(var);
    if (!v) return 1;
    int n = std::atoi(v);
    return (n >= 1) ? n : 1;
}

} // namespace bergman
