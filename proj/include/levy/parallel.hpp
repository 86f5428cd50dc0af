#ifndef LEVY_PARALLEL_HPP
#define LEVY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace levy {

// Worker count resolution: LEVY_EXIT_WORKERS overrides the requested value,
// which overrides hardware concurrency.
inline unsigned effective_workers(unsigned requested = 0) {
    if (const char* env = std::getenv("LEVY_EXIT_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs body(i) for i in [0, count) on a small pool. Work is handed out in
// blocks via an atomic cursor; callers must write results by index so the
// outcome does not depend on scheduling.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned workers, Body&& body) {
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    constexpr std::uint64_t kBlock = 64;
    std::atomic<std::uint64_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t begin = cursor.fetch_add(kBlock);
            if (begin >= count) return;
            const std::uint64_t end = std::min(begin + kBlock, count);
            try {
                for (std::uint64_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    const unsigned pool = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, (count + kBlock - 1) / kBlock));
    std::vector<std::thread> threads;
    threads.reserve(pool > 0 ? pool - 1 : 0);
    for (unsigned w = 1; w < pool; ++w) threads.emplace_back(run);
    run();
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace levy

#endif
