#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace voigt::detail {

// Below this many elements per worker, splitting costs more than it saves.
inline constexpr std::size_t kMinChunk = 1 << 15;

/// Worker count: hardware concurrency, capped by VOIGT_THREADS when set to a positive integer.
inline unsigned thread_count() {
    static const unsigned count = [] {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("VOIGT_THREADS")) {
            unsigned cap = 0;
            const char* end = env + std::strlen(env);
            auto [ptr, ec] = std::from_chars(env, end, cap);
            if (ec == std::errc{} && ptr == end && cap > 0) hw = std::min(hw, cap);
        }
        return hw;
    }();
    return count;
}

/// Calls body(begin, end) over a partition of [0, n). Element-wise work only;
/// the partition never affects results. The first exception thrown by any chunk is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), n / kMinChunk);
    if (workers <= 1) {
        body(std::size_t{0}, n);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 1; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&body, &errors, w, begin, end] {
                try {
                    body(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        try {
            body(std::size_t{0}, std::min(n, chunk));
        } catch (...) {
            errors[0] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace voigt::detail
