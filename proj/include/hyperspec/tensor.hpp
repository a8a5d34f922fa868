#pragma once

// The adjacency tensor of a general hypergraph, applied implicitly edge by
// edge, plus a dense materialization used as an oracle on tiny instances.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/errors.hpp"
#include "hyperspec/expansion.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Implicit adjacency operator. Caches a(e) per edge cardinality.
class AdjacencyOperator {
 public:
  explicit AdjacencyOperator(const Hypergraph& h) : h_(&h), kernel_(h.order()) {
    std::map<std::size_t, double> by_size;
    weight_.reserve(h.num_edges());
    for (const Edge& e : h.edges()) {
      auto it = by_size.find(e.size());
      if (it == by_size.end())
        it = by_size.emplace(e.size(), edge_expansion(e.size(), h.order()).weight_value).first;
      weight_.push_back(it->second);
    }
  }

  const Hypergraph& hypergraph() const noexcept { return *h_; }
  double weight(std::size_t edge_index) const { return weight_.at(edge_index); }

  /// y_i = sum_{e containing i} a(e) * from(e, i), incident edges in ascending order.
  void apply(std::span<const double> x, std::span<double> y) {
    check_size(x);
    if (y.size() != h_->num_vertices()) throw InvalidInstance("output dimension mismatch");
    for (Vertex i = 0; i < h_->num_vertices(); ++i) {
      double acc = 0.0;
      for (std::size_t j : h_->incident(i)) acc += weight_[j] * kernel_.from(h_->edge(j), i, x);
      y[i] = acc;
    }
  }

  std::vector<double> apply(std::span<const double> x) {
    std::vector<double> y(h_->num_vertices());
    apply(x, y);
    return y;
  }

  /// x^T A x = sum_e a(e) * total(e), edges in index order.
  double quadratic_form(std::span<const double> x) {
    check_size(x);
    double acc = 0.0;
    for (std::size_t j = 0; j < h_->num_edges(); ++j)
      acc += weight_[j] * kernel_.total(h_->edge(j), x);
    return acc;
  }

 private:
  void check_size(std::span<const double> x) const {
    if (x.size() != h_->num_vertices())
      throw InvalidInstance("vector has " + std::to_string(x.size()) +
                            " entries, hypergraph has " +
                            std::to_string(h_->num_vertices()) + " vertices");
  }

  const Hypergraph* h_;
  EdgeSumKernel kernel_;
  std::vector<double> weight_;
};

inline std::vector<double> apply(const Hypergraph& h, std::span<const double> x) {
  return AdjacencyOperator(h).apply(x);
}

inline double quadratic_form(const Hypergraph& h, std::span<const double> x) {
  return AdjacencyOperator(h).quadratic_form(x);
}

// ---------------------------------------------------------------------------
// Dense tensor

struct DenseTensor {
  std::size_t n = 0;
  std::size_t k = 0;
  /// Row-major: index (i_1, ..., i_k) maps to sum_t i_t * n^(k - t).
  std::vector<double> entries;

  std::size_t flat_index(std::span<const std::size_t> idx) const {
    std::size_t flat = 0;
    for (std::size_t t : idx) flat = flat * n + t;
    return flat;
  }

  double at(std::span<const std::size_t> idx) const { return entries.at(flat_index(idx)); }
};

inline constexpr double dense_entry_cap = 1e7;

inline DenseTensor materialize_dense(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t k = h.order();
  if (std::pow(static_cast<double>(n), static_cast<double>(k)) > dense_entry_cap)
    throw CapExceeded("dense tensor would need n^k = " + std::to_string(n) + "^" +
                      std::to_string(k) + " > 1e7 entries");
  DenseTensor t;
  t.n = n;
  t.k = k;
  std::size_t total = 1;
  for (std::size_t p = 0; p < k; ++p) total *= n;
  t.entries.assign(total, 0.0);

  AdjacencyOperator op(h);
  std::vector<std::size_t> digit(k);
  std::vector<std::size_t> idx(k);
  std::vector<bool> hit;
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    const Edge& e = h.edge(j);
    const std::size_t r = e.size();
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      hit.assign(r, false);
      for (std::size_t p = 0; p < k; ++p) {
        hit[digit[p]] = true;
        idx[p] = e[digit[p]];
      }
      if (std::find(hit.begin(), hit.end(), false) == hit.end())
        t.entries[t.flat_index(idx)] = op.weight(j);
      std::size_t p = 0;
      while (p < k && ++digit[p] == r) digit[p++] = 0;
      if (p == k) break;
    }
  }
  return t;
}

/// (T x)_i = sum over i_2..i_k of t_{i i_2 ... i_k} x_{i_2} ... x_{i_k}.
inline std::vector<double> contract(const DenseTensor& t, std::span<const double> x) {
  if (x.size() != t.n) throw InvalidInstance("vector dimension mismatch");
  std::vector<double> y(t.n, 0.0);
  const std::size_t block = t.entries.size() / (t.n == 0 ? 1 : t.n);
  std::vector<std::size_t> digit(t.k - 1, 0);
  for (std::size_t i = 0; i < t.n; ++i) {
    double acc = 0.0;
    std::fill(digit.begin(), digit.end(), 0);
    for (std::size_t off = 0; off < block; ++off) {
      const double a = t.entries[i * block + off];
      if (a != 0.0) {
        double prod = a;
        for (std::size_t d : digit) prod *= x[d];
        acc += prod;
      }
      // digit holds i_2..i_k with i_k fastest
      for (std::size_t p = digit.size(); p-- > 0;) {
        if (++digit[p] < t.n) break;
        digit[p] = 0;
      }
    }
    y[i] = acc;
  }
  return y;
}

/// One line per nonzero entry: `i_1 ... i_k value`, lexicographic index order.
inline void write_nonzeros(const DenseTensor& t, std::ostream& out) {
  std::vector<std::size_t> idx(t.k, 0);
  char buf[32];
  for (std::size_t flat = 0; flat < t.entries.size(); ++flat) {
    if (t.entries[flat] != 0.0) {
      for (std::size_t p = 0; p < t.k; ++p) out << idx[p] << ' ';
      std::snprintf(buf, sizeof buf, "%.17g", t.entries[flat]);
      out << buf << '\n';
    }
    for (std::size_t p = t.k; p-- > 0;) {
      if (++idx[p] < t.n) break;
      idx[p] = 0;
    }
  }
}

}  // namespace hyperspec
