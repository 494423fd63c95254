#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gl2 {

/// Worker count for bulk sweeps: GL2_WORKERS if set, else the value passed to
/// set_default_workers, else 1.
unsigned default_workers();
void set_default_workers(unsigned n);

/// Sums body(i) over [0, n) on default_workers() threads. Chunks are
/// contiguous and partial sums are combined in chunk order.
template <typename T, typename Body>
T parallel_sum(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(default_workers(), n == 0 ? 1 : n);
    if (workers <= 1) {
        T total{};
        for (std::size_t i = 0; i < n; ++i) total += body(i);
        return total;
    }
    std::vector<T> partial(workers, T{});
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) partial[w] += body(i);
        });
    }
    for (auto& t : pool) t.join();
    T total{};
    for (const auto& v : partial) total += v;
    return total;
}

}  // namespace gl2
