#pragma once

// Counting k-expanded edges and evaluating the per-edge sums
//
//   from(e, i)  = sum over sequences (i, a_2, ..., a_k) with {i, a_2, ..., a_k} = e
//                 of x_{a_2} ... x_{a_k}
//   total(e)    = sum over sequences (a_1, ..., a_k) with {a_1, ..., a_k} = e
//                 of x_{a_1} ... x_{a_k}
//
// Three routes are provided. The default one multiplies exponential generating
// functions: sequences of length L over e covering a set C have EGF
//   prod_{v in C} (exp(x_v t) - 1) * prod_{v in e \ C} exp(x_v t)
// and the sum is L! [t^L] of it. Every term is non-negative, so it does not
// cancel. The alternating-sign subset formula and literal enumeration are kept
// as independent cross-checks.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/errors.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Number of maps from a k-set onto an r-set, i.e. r! * S(k, r).
inline BigInt surjection_count(std::size_t r, std::size_t k) {
  if (r < 1) throw InvalidInstance("surjection_count needs r >= 1");
  if (r > k) throw InvalidInstance("surjection_count needs r <= k");
  BigInt sum = 0;
  BigInt binom = 1;  // C(r, j)
  for (std::size_t j = 0; j <= r; ++j) {
    BigInt term = binom * boost::multiprecision::pow(BigInt(r - j), static_cast<unsigned>(k));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
    binom = binom * (r - j) / (j + 1);
  }
  return sum;
}

struct EdgeExpansion {
  std::size_t cardinality = 0;
  /// |S(e)|: ordered length-k sequences whose distinct entries are exactly e.
  BigInt count;
  /// |S(e)_v|: those starting with a fixed v in e.
  BigInt count_from_vertex;
  /// a(e) = |e| / |S(e)|, the tensor entry on each expanded edge.
  BigRational weight;
  double weight_value = 0.0;
};

inline EdgeExpansion edge_expansion(std::size_t cardinality, std::size_t k) {
  if (cardinality > k)
    throw InvalidInstance("edge of size " + std::to_string(cardinality) +
                          " exceeds tensor order " + std::to_string(k));
  EdgeExpansion out;
  out.cardinality = cardinality;
  out.count = surjection_count(cardinality, k);
  if (out.count % cardinality != 0)
    throw std::logic_error("surjection count not divisible by edge size");
  out.count_from_vertex = out.count / cardinality;
  out.weight = BigRational(BigInt(cardinality), out.count);
  out.weight_value = out.weight.convert_to<double>();
  return out;
}

inline EdgeExpansion edge_expansion(std::span<const Vertex> e, std::size_t k) {
  return edge_expansion(e.size(), k);
}

namespace detail {

inline void check_edge_against(std::span<const Vertex> e, std::span<const double> x) {
  if (e.empty()) throw InvalidInstance("edge is empty");
  for (Vertex v : e)
    if (v >= x.size())
      throw InvalidInstance("edge vertex " + std::to_string(v) +
                            " out of range for vector of size " +
                            std::to_string(x.size()));
}

inline void check_member(std::span<const Vertex> e, Vertex i) {
  if (std::find(e.begin(), e.end(), i) == e.end())
    throw InvalidInstance("vertex " + std::to_string(i) + " is not in the edge");
}

/// Pascal row C(len, 0..len) as doubles.
inline std::vector<double> binomial_row(std::size_t len) {
  std::vector<double> row(len + 1, 0.0);
  row[0] = 1.0;
  for (std::size_t m = 1; m <= len; ++m)
    for (std::size_t j = m; j > 0; --j) row[j] += row[j - 1];
  return row;
}

/// Coefficients f_j of an EGF sum_j f_j t^j / j!, truncated at degree `len`.
/// Multiplies in exp(x t) (cover = false) or exp(x t) - 1 (cover = true).
class EgfProduct {
 public:
  explicit EgfProduct(std::size_t len) : len_(len), f_(len + 1, 0.0), g_(len + 1), h_(len + 1) {
    f_[0] = 1.0;
    pascal_.reserve(len + 1);
    for (std::size_t m = 0; m <= len; ++m) pascal_.push_back(binomial_row(m));
  }

  void reset() {
    std::fill(f_.begin(), f_.end(), 0.0);
    f_[0] = 1.0;
  }

  void multiply(double x, bool cover) {
    g_[0] = cover ? 0.0 : 1.0;
    double p = 1.0;
    for (std::size_t j = 1; j <= len_; ++j) {
      p *= x;
      g_[j] = p;
    }
    for (std::size_t m = 0; m <= len_; ++m) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= m; ++j) acc += pascal_[m][j] * f_[j] * g_[m - j];
      h_[m] = acc;
    }
    f_.swap(h_);
  }

  double top() const { return f_[len_]; }

 private:
  std::size_t len_;
  std::vector<double> f_, g_, h_;
  std::vector<std::vector<double>> pascal_;
};

inline void check_enumeration_cap(std::size_t symbols, std::size_t length, std::size_t k) {
  constexpr double cap = 1e7;
  if (k > 8 || std::pow(static_cast<double>(symbols), static_cast<double>(length)) > cap)
    throw CapExceeded("enumeration cap exceeded (k <= 8 and |e|^len <= 1e7); "
                      "use the closed form instead");
}

/// Visits every length-`len` sequence over `symbols` (odometer order) that
/// contains each symbol flagged in `must_cover`, passing the product of x.
template <class Visit>
void for_each_covering_sequence(std::span<const Vertex> symbols,
                                const std::vector<bool>& must_cover, std::size_t len,
                                std::span<const double> x, Visit&& visit) {
  const std::size_t r = symbols.size();
  std::vector<std::size_t> digit(len, 0);
  std::vector<std::size_t> hits(r, 0);
  while (true) {
    std::fill(hits.begin(), hits.end(), 0);
    double prod = 1.0;
    for (std::size_t p = 0; p < len; ++p) {
      ++hits[digit[p]];
      prod *= x[symbols[digit[p]]];
    }
    bool ok = true;
    for (std::size_t s = 0; s < r && ok; ++s) ok = !must_cover[s] || hits[s] > 0;
    if (ok) visit(prod);

    std::size_t p = 0;
    while (p < len && ++digit[p] == r) digit[p++] = 0;
    if (p == len) break;
  }
}

}  // namespace detail

/// Generating-function evaluator for a fixed order k. Holds scratch buffers,
/// so one instance must not be shared between threads.
class EdgeSumKernel {
 public:
  explicit EdgeSumKernel(std::size_t k) : k_(checked(k)), from_(k - 1), total_(k) {}

  std::size_t order() const noexcept { return k_; }

  /// Sum over S(e)_i of the product of the trailing k-1 entries.
  double from(std::span<const Vertex> e, Vertex i, std::span<const double> x) {
    detail::check_edge_against(e, x);
    detail::check_member(e, i);
    if (e.size() > k_) throw InvalidInstance("edge larger than tensor order");
    from_.reset();
    for (Vertex v : e) from_.multiply(x[v], v != i);
    return from_.top();
  }

  /// Sum over S(e) of the product of all k entries.
  double total(std::span<const Vertex> e, std::span<const double> x) {
    detail::check_edge_against(e, x);
    if (e.size() > k_) throw InvalidInstance("edge larger than tensor order");
    total_.reset();
    for (Vertex v : e) total_.multiply(x[v], true);
    return total_.top();
  }

 private:
  static std::size_t checked(std::size_t k) {
    if (k < 2) throw InvalidInstance("tensor order k must be at least 2");
    return k;
  }

  std::size_t k_;
  detail::EgfProduct from_;
  detail::EgfProduct total_;
};

inline double edge_sum_from(std::span<const Vertex> e, Vertex i, std::span<const double> x,
                            std::size_t k) {
  return EdgeSumKernel(k).from(e, i, x);
}

inline double edge_sum_total(std::span<const Vertex> e, std::span<const double> x,
                             std::size_t k) {
  return EdgeSumKernel(k).total(e, x);
}

/// Alternating subset form: sum over T, i in T subset of e of
/// (-1)^{|e|-|T|} (sum_{v in T} x_v)^{k-1}. Subsets visited in increasing
/// bitmask order.
inline double edge_sum_from_alternating(std::span<const Vertex> e, Vertex i,
                                        std::span<const double> x, std::size_t k) {
  detail::check_edge_against(e, x);
  detail::check_member(e, i);
  if (e.size() > 30) throw CapExceeded("alternating form limited to |e| <= 30");
  const std::size_t r = e.size();
  const std::size_t pos_i = static_cast<std::size_t>(std::find(e.begin(), e.end(), i) - e.begin());
  double sum = 0.0;
  for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
    if (!(mask >> pos_i & 1ul)) continue;
    double s = 0.0;
    std::size_t size = 0;
    for (std::size_t b = 0; b < r; ++b)
      if (mask >> b & 1ul) {
        s += x[e[b]];
        ++size;
      }
    const double term = std::pow(s, static_cast<double>(k - 1));
    sum += ((r - size) % 2 == 0) ? term : -term;
  }
  return sum;
}

inline double edge_sum_total_alternating(std::span<const Vertex> e, std::span<const double> x,
                                         std::size_t k) {
  detail::check_edge_against(e, x);
  if (e.size() > 30) throw CapExceeded("alternating form limited to |e| <= 30");
  const std::size_t r = e.size();
  double sum = 0.0;
  for (unsigned long mask = 1; mask < (1ul << r); ++mask) {
    double s = 0.0;
    std::size_t size = 0;
    for (std::size_t b = 0; b < r; ++b)
      if (mask >> b & 1ul) {
        s += x[e[b]];
        ++size;
      }
    const double term = std::pow(s, static_cast<double>(k));
    sum += ((r - size) % 2 == 0) ? term : -term;
  }
  return sum;
}

/// Literal enumeration of S(e)_i. Capped at k <= 8 and |e|^(k-1) <= 1e7.
inline double enumerate_edge_sum_from(std::span<const Vertex> e, Vertex i,
                                      std::span<const double> x, std::size_t k) {
  detail::check_edge_against(e, x);
  detail::check_member(e, i);
  if (e.size() > k) throw InvalidInstance("edge larger than tensor order");
  detail::check_enumeration_cap(e.size(), k - 1, k);
  std::vector<bool> cover(e.size());
  for (std::size_t s = 0; s < e.size(); ++s) cover[s] = e[s] != i;
  double sum = 0.0;
  detail::for_each_covering_sequence(e, cover, k - 1, x, [&](double p) { sum += p; });
  return sum;
}

/// Literal enumeration of S(e). Capped at k <= 8 and |e|^k <= 1e7.
inline double enumerate_edge_sum_total(std::span<const Vertex> e, std::span<const double> x,
                                       std::size_t k) {
  detail::check_edge_against(e, x);
  if (e.size() > k) throw InvalidInstance("edge larger than tensor order");
  detail::check_enumeration_cap(e.size(), k, k);
  std::vector<bool> cover(e.size(), true);
  double sum = 0.0;
  detail::for_each_covering_sequence(e, cover, k, x, [&](double p) { sum += p; });
  return sum;
}

}  // namespace hyperspec
