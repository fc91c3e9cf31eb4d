#pragma once

// Deterministic block scheduler: work is split into a block count that
// depends only on the problem size, workers pull blocks from an atomic
// counter, and the caller merges per-block results in block order. Output
// is therefore byte-identical for any thread hint.

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace goldbach {

inline unsigned resolve_threads(int hint) {
    if (hint > 0) return static_cast<unsigned>(hint);
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// fn(block_index) for block_index in [0, nblocks); fn must only write state
// owned by its block.
template <class Fn>
void for_blocks(std::size_t nblocks, int thread_hint, Fn&& fn) {
    unsigned nthreads = resolve_threads(thread_hint);
    if (nthreads <= 1 || nblocks <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b) fn(b);
        return;
    }
    if (nthreads > nblocks) nthreads = static_cast<unsigned>(nblocks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= nblocks) break;
            fn(b);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads - 1);
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

// index range [0, n) in fixed-size blocks; fn(block, lo, hi)
template <class Fn>
void for_index_blocks(std::size_t n, std::size_t block_size, int thread_hint, Fn&& fn) {
    if (block_size == 0) block_size = 1;
    std::size_t nblocks = (n + block_size - 1) / block_size;
    for_blocks(nblocks, thread_hint, [&](std::size_t b) {
        std::size_t lo = b * block_size;
        std::size_t hi = lo + block_size < n ? lo + block_size : n;
        fn(b, lo, hi);
    });
}

} // namespace goldbach
