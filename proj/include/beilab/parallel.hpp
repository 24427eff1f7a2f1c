#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace beilab {

// Worker count: BEI_THREADS when set (>=1), hardware concurrency otherwise.
inline int thread_count() {
    if (const char* env = std::getenv("BEI_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {
inline thread_local bool inside_parallel_for = false;
}

// Runs f(i) for i in [0, count) across workers. Callers write results into
// pre-sized slots, so scheduling never affects the outcome. Nested calls run
// serially instead of oversubscribing.
template <typename F>
void parallel_for(size_t count, F&& f) {
    int workers = thread_count();
    if (workers <= 1 || count <= 1 || detail::inside_parallel_for) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&] {
        detail::inside_parallel_for = true;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<size_t>(static_cast<size_t>(workers), count);
    pool.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

}  // namespace beilab
