#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct RandomInstanceParams {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 10;
  std::size_t min_order = 2;
  std::size_t max_order = 4;
};

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t out = 1;
  for (std::size_t t = 1; t <= r; ++t) out = out * (n - r + t) / t;
  return out;
}

}  // namespace detail

/// Draws n in [min_vertices, max_vertices], a size cap k in [min_order,
/// max_order] and m in [n-1, 2n] (clamped to the number of available subsets),
/// then samples distinct edges of size uniform in [2, min(k, n)]. The whole
/// draw is repeated until the result is connected. Tensor order is the rank.
inline Hypergraph random_connected_hypergraph(std::mt19937_64& rng,
                                              const RandomInstanceParams& p = {}) {
  using dist = std::uniform_int_distribution<std::size_t>;
  while (true) {
    const std::size_t n = dist(p.min_vertices, p.max_vertices)(rng);
    const std::size_t k_cap = std::min(dist(p.min_order, p.max_order)(rng), n);
    std::size_t available = 0;
    for (std::size_t s = 2; s <= k_cap; ++s) available += detail::binomial(n, s);
    const std::size_t m = std::min(dist(n - 1, 2 * n)(rng), available);

    std::set<Edge> seen;
    std::vector<Edge> edges;
    std::vector<Vertex> pool(n);
    while (edges.size() < m) {
      const std::size_t size = dist(2, k_cap)(rng);
      for (Vertex v = 0; v < n; ++v) pool[v] = v;
      // partial Fisher-Yates
      for (std::size_t t = 0; t < size; ++t) std::swap(pool[t], pool[dist(t, n - 1)(rng)]);
      Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
      std::sort(e.begin(), e.end());
      if (seen.insert(e).second) edges.push_back(std::move(e));
    }
    Hypergraph h(n, std::move(edges));
    if (connectivity(h).connected) return h;
  }
}

/// Entries uniform in [lo, hi).
inline std::vector<double> random_positive_vector(std::mt19937_64& rng, std::size_t n,
                                                  double lo = 0.05, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> x(n);
  for (double& v : x) v = d(rng);
  return x;
}

}  // namespace hyperspec
