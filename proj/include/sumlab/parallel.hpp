#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace sumlab {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, count) into one contiguous chunk per worker and merges the
// partial results in chunk order, so the outcome does not depend on the
// number of workers or their scheduling.
//
// work(first, last) -> Partial;  merge(accumulator, partial) folds left.
template <typename Partial, typename Work, typename Merge>
Partial parallel_chunks(std::uint64_t count, int threads, Work&& work, Merge&& merge) {
    const int t = static_cast<int>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(count, 1)));
    if (t <= 1 || count == 0) return work(0, count);

    std::vector<Partial> partials;
    partials.reserve(t);
    for (int i = 0; i < t; ++i) partials.emplace_back();
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int i = 0; i < t; ++i) {
        const std::uint64_t first = count * i / t;
        const std::uint64_t last = count * (i + 1) / t;
        pool.emplace_back([&, i, first, last] { partials[i] = work(first, last); });
    }
    for (auto& th : pool) th.join();

    Partial acc = std::move(partials[0]);
    for (int i = 1; i < t; ++i) merge(acc, std::move(partials[i]));
    return acc;
}

}  // namespace sumlab
