#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace pgq {

// Static partition of [0, total) into `jobs` contiguous chunks, one worker
// thread per non-empty chunk. Each chunk produces an R; the caller reduces
// the returned vector (chunk order is fixed, so any reduction the caller
// does is schedule-independent).
template <typename R>
std::vector<R> parallel_chunks(std::uint64_t total, int jobs,
                               const std::function<R(std::uint64_t lo, std::uint64_t hi)>& fn) {
    if (jobs < 1) jobs = 1;
    std::uint64_t nchunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
    if (nchunks <= 1) {
        std::vector<R> out;
        if (total > 0) out.push_back(fn(0, total));
        return out;
    }
    std::vector<R> results(nchunks);
    std::vector<std::thread> workers;
    workers.reserve(nchunks);
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t lo = total * c / nchunks;
        std::uint64_t hi = total * (c + 1) / nchunks;
        workers.emplace_back([&, c, lo, hi] { results[c] = fn(lo, hi); });
    }
    for (auto& w : workers) w.join();
    return results;
}

}  // namespace pgq
