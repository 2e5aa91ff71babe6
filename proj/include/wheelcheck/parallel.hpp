#ifndef WHEELCHECK_PARALLEL_HPP
#define WHEELCHECK_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wheelcheck {

// Applies fn(i) for i in [0, count) on up to `jobs` threads; results land
// in index order, so the output is deterministic regardless of scheduling.
template <typename R, typename Fn>
std::vector<R> parallel_map(int count, int jobs, Fn&& fn) {
    std::vector<R> results(count);
    if (count == 0) return results;
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    results[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace wheelcheck

#endif
