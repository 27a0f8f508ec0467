#pragma once

#include <cstddef>
#include <vector>

namespace qgem {

// Deterministic parallel reduction: the index range is split into a fixed
// chunk grid (independent of the thread count), chunk sums run in parallel,
// and the partials are combined in chunk order. Two runs therefore produce
// bit-identical sums no matter how OpenMP schedules the chunks.
template <class T, class F>
T chunked_sum(std::size_t count, F&& element) {
    if (count == 0) return T{};
    const std::size_t nchunks = count < 4096 ? 1 : 256;
    const std::size_t step = (count + nchunks - 1) / nchunks;
    std::vector<T> partial(nchunks, T{});
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < (long long)nchunks; ++c) {
        const std::size_t lo = std::size_t(c) * step;
        const std::size_t hi = lo + step < count ? lo + step : count;
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += element(i);
        partial[std::size_t(c)] = acc;
    }
    T total{};
    for (const auto& p : partial) total += p;
    return total;
}

// Same idea for histogram-style accumulation into `bins` slots.
template <class T, class F>
std::vector<T> chunked_bins(std::size_t count, std::size_t bins, F&& accumulate) {
    const std::size_t nchunks = count < 4096 ? 1 : 256;
    const std::size_t step = (count + nchunks - 1) / nchunks;
    std::vector<std::vector<T>> partial(nchunks, std::vector<T>(bins, T{}));
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < (long long)nchunks; ++c) {
        const std::size_t lo = std::size_t(c) * step;
        const std::size_t hi = lo + step < count ? lo + step : count;
        auto& local = partial[std::size_t(c)];
        for (std::size_t i = lo; i < hi; ++i) accumulate(i, local);
    }
    std::vector<T> total(bins, T{});
    for (const auto& p : partial)
        for (std::size_t b = 0; b < bins; ++b) total[b] += p[b];
    return total;
}

}  // namespace qgem
