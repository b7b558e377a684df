#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tktile {

/// Calls fn(i) for every i in [0, count) on up to `workers` threads. Jobs
/// write to their own slots, so results do not depend on scheduling. The
/// first exception thrown by any job is rethrown here.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn && fn)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                fn(i);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back(body);
    for (auto & t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}
