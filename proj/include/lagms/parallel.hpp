#ifndef LAGMS_PARALLEL_HPP
#define LAGMS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lagms {

/// Worker count from LAGMS_THREADS; unset or 0 means hardware concurrency.
inline unsigned thread_budget()
{
    unsigned n = 0;
    if (const char* env = std::getenv("LAGMS_THREADS")) {
        try {
            n = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            n = 0;
        }
    }
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and
/// returns the results in index order, independent of scheduling. The
/// first exception thrown by any task is rethrown.
template <class Fn>
auto ordered_parallel_map(std::size_t count, Fn fn, unsigned threads = thread_budget())
{
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> out(count);
    threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace lagms

#endif // LAGMS_PARALLEL_HPP
