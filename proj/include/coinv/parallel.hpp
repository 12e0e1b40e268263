#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coinv::parallel {

/// Worker count used when a caller does not pass one. 0 means "all cores".
unsigned default_jobs();
void set_default_jobs(unsigned jobs);

namespace detail {
inline thread_local bool inside_worker = false;
}

/// Calls fn(i) for every i in [0, count). Work is pulled from a shared
/// counter; callers must write results into slot i so the outcome never
/// depends on the schedule. The first exception thrown by any task is
/// rethrown after all workers have joined. Nested calls from inside a
/// worker run serially.
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn, unsigned jobs = default_jobs())
{
    const std::size_t workers = std::min<std::size_t>(jobs == 0 ? 1 : jobs, count);
    if (workers <= 1 || detail::inside_worker) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                detail::inside_worker = true;
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count)
                        return;
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next.store(count);
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace coinv::parallel
