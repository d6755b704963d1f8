#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace skewcode {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs body(block, worker) for block in [0, blocks) on a small pool.
/// Blocks are handed out dynamically; the first exception is rethrown.
template <class Body>
void parallel_blocks(std::uint64_t blocks, unsigned threads, Body&& body) {
    threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(blocks, 1)));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&](unsigned id) {
        try {
            for (std::uint64_t b = next++; b < blocks; b = next++) body(b, id);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = blocks;
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
}

/// 64-bit seed for an independent stream; stable across platforms.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace skewcode
