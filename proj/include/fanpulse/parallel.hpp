#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fanpulse {

// 0 means "use available parallelism".
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Splits [0, n) into at most `threads` contiguous chunks and runs
// fn(chunk, begin, end) for each, chunk 0 on the calling thread. The first
// exception in chunk order is rethrown after all workers finish.
template <typename Fn>
void for_each_chunk(std::size_t n, unsigned threads, Fn&& fn) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), n));
    if (chunks == 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    auto run = [&](std::size_t chunk) {
        const std::size_t begin = n * chunk / chunks;
        const std::size_t end = n * (chunk + 1) / chunks;
        try {
            fn(chunk, begin, end);
        } catch (...) {
            errors[chunk] = std::current_exception();
        }
    };
    {
        std::vector<std::jthread> workers;
        workers.reserve(chunks - 1);
        for (std::size_t chunk = 1; chunk < chunks; ++chunk) workers.emplace_back(run, chunk);
        run(0);
    }
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
}

inline std::size_t chunk_count(std::size_t n, unsigned threads) {
    return std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), n));
}

}  // namespace fanpulse
