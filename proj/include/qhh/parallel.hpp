#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qhh {

// Worker count for embarrassingly parallel loops; QHH_THREADS caps it.
inline unsigned worker_count() {
    if (const char* env = std::getenv("QHH_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min(v, 256l));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// fn(i) for i in [0, n); work items must be independent. Results land in
// caller-owned per-index slots, so output does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : threads) t.join();
    if (err) std::rethrow_exception(err);
}

} // namespace qhh
