#pragma once

#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace bmoll {

// Reduces per_index(0) .. per_index(n-1) with `merge`, splitting [0, n) into
// contiguous chunks, one per worker, and folding the partials in chunk
// order. All reductions in this project are exact and commutative, so the
// result is bit-identical at every thread count.
template <class T, class PerIndex, class Merge>
T parallel_reduce(std::size_t n, T init, PerIndex per_index, Merge merge,
                  unsigned threads = 1) {
  if (threads <= 1 || n < 2) {
    T acc = std::move(init);
    for (std::size_t i = 0; i < n; ++i) acc = merge(std::move(acc), per_index(i));
    return acc;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<T> partials(workers, init);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = n * w / workers;
      const std::size_t hi = n * (w + 1) / workers;
      T acc = init;
      for (std::size_t i = lo; i < hi; ++i) acc = merge(std::move(acc), per_index(i));
      partials[w] = std::move(acc);
    });
  }
  for (auto& t : pool) t.join();
  T acc = std::move(init);
  for (auto& part : partials) acc = merge(std::move(acc), std::move(part));
  return acc;
}

}  // namespace bmoll
