#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pslf {

// Runs task(i) for every i in [0, count) on up to `workers` threads
// (0 picks std::thread::hardware_concurrency). The caller thread works too.
// The first exception thrown by a task is rethrown after all workers finish.
template <typename Task>
void parallel_for(int count, int workers, Task&& task) {
    if (count <= 0) return;
    int n = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (n > count) n = count;

    if (n == 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(n - 1);
    for (int k = 0; k < n - 1; ++k) pool.emplace_back(body);
    body();
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace pslf
