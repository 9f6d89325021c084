#include "ordcheck/parallel_for.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ordcheck {

std::size_t max_threads()
{
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0)
        n = 1;
    if (const char* env = std::getenv("ORDCHECK_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<std::size_t>(cap) < n)
            n = static_cast<std::size_t>(cap);
    }
    return n;
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min(max_threads(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace ordcheck
