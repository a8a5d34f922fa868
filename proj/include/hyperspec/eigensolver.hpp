#pragma once

// Principal eigenpair of a connected hypergraph by shifted higher-order power
// iteration. Each step maps
//   x  ->  normalize_k( (A x + shift * x^[k-1])^[1/(k-1)] )
// and convergence is declared on the Collatz bracket
//   [min_i (A x)_i / x_i^(k-1),  max_i (A x)_i / x_i^(k-1)],
// which contains rho for every positive x.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <span>
#include <utility>
#include <vector>

#include "hyperspec/errors.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

struct SolverConfig {
  double tolerance = 1e-10;
  std::size_t max_iterations = 200000;
  /// Defaults to the maximum degree.
  std::optional<double> shift;
  /// Positive starting vector. Defaults to the uniform vector.
  std::optional<std::vector<double>> start;
  bool record_trace = false;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double gap() const noexcept { return hi - lo; }
};

struct PrincipalEigenpair {
  double rho = 0.0;
  /// Positive, sum_i x_i^k = 1.
  std::vector<double> x;
  double residual = 0.0;
  std::size_t iterations = 0;
  Bracket bracket;
  double shift = 0.0;
  std::size_t order = 2;
  /// Bracket before each update, when SolverConfig::record_trace is set.
  std::vector<Bracket> trace;
};

/// Scales x in place so that sum_i x_i^k = 1.
inline void normalize_lk(std::span<double> x, std::size_t k) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, static_cast<double>(k));
  const double norm = std::pow(s, 1.0 / static_cast<double>(k));
  for (double& v : x) v /= norm;
}

/// Collatz bracket of A at a positive vector x given y = A x.
inline Bracket collatz_bracket(std::span<const double> x, std::span<const double> ax,
                               std::size_t k) {
  Bracket b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ratio = ax[i] / std::pow(x[i], static_cast<double>(k - 1));
    b.lo = std::min(b.lo, ratio);
    b.hi = std::max(b.hi, ratio);
  }
  return b;
}

/// max_i |(A x)_i - rho x_i^(k-1)|.
inline double residual(const Hypergraph& h, double rho, std::span<const double> x) {
  const std::vector<double> ax = hyperspec::apply(h, x);
  const double km1 = static_cast<double>(h.order() - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    worst = std::max(worst, std::abs(ax[i] - rho * std::pow(x[i], km1)));
  return worst;
}

inline double residual(const Hypergraph& h, const PrincipalEigenpair& pair) {
  return residual(h, pair.rho, pair.x);
}

inline PrincipalEigenpair solve_principal(const Hypergraph& h, const SolverConfig& cfg = {}) {
  if (!(cfg.tolerance > 0.0)) throw InvalidInstance("solver tolerance must be positive");
  if (h.num_edges() == 0) throw NoEdges();
  const ConnectivityResult conn = connectivity(h);
  if (!conn.connected) throw Disconnected(conn.num_components);

  const std::size_t n = h.num_vertices();
  const std::size_t k = h.order();
  const double km1 = static_cast<double>(k - 1);
  const double shift = cfg.shift.value_or(static_cast<double>(degrees(h).max));
  if (!(shift >= 0.0)) throw InvalidInstance("solver shift must be non-negative");

  std::vector<double> x(n, 1.0);
  if (cfg.start) {
    if (cfg.start->size() != n) throw InvalidInstance("start vector has the wrong dimension");
    for (double v : *cfg.start)
      if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidInstance("start vector must be strictly positive and finite");
    x = *cfg.start;
  }
  normalize_lk(x, k);

  AdjacencyOperator op(h);
  std::vector<double> ax(n);
  PrincipalEigenpair out;
  out.shift = shift;
  out.order = k;

  std::size_t iter = 0;
  while (true) {
    op.apply(x, ax);
    const Bracket b = collatz_bracket(x, ax, k);
    if (cfg.record_trace) out.trace.push_back(b);
    out.bracket = b;
    if (b.gap() <= cfg.tolerance) break;
    if (iter >= cfg.max_iterations) throw NotConverged(iter, b.lo, b.hi);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = std::pow(ax[i] + shift * std::pow(x[i], km1), 1.0 / km1);
    normalize_lk(x, k);
    ++iter;
  }

  out.iterations = iter;
  out.rho = op.quadratic_form(x);
  out.x = std::move(x);
  out.residual = residual(h, out.rho, out.x);
  return out;
}

struct RegularCertificate {
  double rho = 0.0;
  std::vector<double> x;
  double residual = 0.0;
};

/// Closed-form principal eigenpair of an r-regular hypergraph: (r, n^(-1/k) * 1).
/// Empty when the degrees are not all equal.
inline std::optional<RegularCertificate> verify_regular_eigenpair(const Hypergraph& h) {
  const DegreeProfile d = degrees(h);
  if (!d.regular() || d.max == 0) return std::nullopt;
  RegularCertificate cert;
  cert.rho = static_cast<double>(d.max);
  cert.x.assign(h.num_vertices(),
                std::pow(static_cast<double>(h.num_vertices()), -1.0 / static_cast<double>(h.order())));
  cert.residual = residual(h, cert.rho, cert.x);
  if (cert.residual > 1e-10)
    throw std::logic_error("regular closed-form eigenpair has residual above 1e-10");
  return cert;
}

}  // namespace hyperspec
