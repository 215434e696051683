#ifndef DPB_PARALLEL_HPP
#define DPB_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "dpb/check_report.hpp"

namespace dpb {

// Runs fn(i) for every i in [0, total); fn returns an empty optional on
// success. All indices are visited and the failure with the smallest index
// is returned, so the reported counterexample does not depend on the thread
// count.
template <class Fn>
std::optional<Counterexample>
parallel_first_failure(std::size_t total, int threads, Fn&& fn) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < total; ++i)
            if (auto ce = fn(i))
                return ce;
        return std::nullopt;
    }

    std::atomic<std::size_t> next{0};
    std::mutex mtx;
    std::size_t best_index = total;
    std::optional<Counterexample> best;

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= total)
                return;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (i > best_index)
                    continue; // a smaller failure already exists
            }
            if (auto ce = fn(i)) {
                std::lock_guard<std::mutex> lock(mtx);
                if (i < best_index) {
                    best_index = i;
                    best = std::move(ce);
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return best;
}

} // namespace dpb

#endif
