#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace gf2du {

/// Splits [0, total) into contiguous chunks and runs fn(chunk_index, begin, end)
/// on worker threads. Chunk boundaries depend on `threads`, so callers must
/// merge per-chunk results in a way that only depends on item order (e.g. by
/// ascending index), never on the chunking itself.
inline void parallel_chunks(std::uint64_t total, unsigned threads,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (threads <= 1 || total < 2) {
        if (total > 0) fn(0, 0, total);
        return;
    }
    unsigned nchunks = threads;
    if (nchunks > total) nchunks = static_cast<unsigned>(total);
    std::vector<std::thread> workers;
    workers.reserve(nchunks);
    std::uint64_t base = total / nchunks, extra = total % nchunks;
    std::uint64_t begin = 0;
    for (unsigned c = 0; c < nchunks; ++c) {
        std::uint64_t len = base + (c < extra ? 1 : 0);
        std::uint64_t end = begin + len;
        workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
        begin = end;
    }
    for (auto& w : workers) w.join();
}

}  // namespace gf2du
