#pragma once

// Extreme-entry parameters of the principal eigenvector and the audit of the
// inequalities relating them to rho, degrees, n, k and m.
//
// Every check is phrased as `lhs <= rhs`, with slack = rhs - lhs. Where an
// equality characterization is known, the check records what it predicts
// (`equality_expected`) and whether the observed equality flag agrees.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hyperspec/eigensolver.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/expansion.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Relative tolerance for equality flags and for entry comparisons.
inline constexpr double equality_tolerance = 1e-8;
/// Absolute floor under which two values count as equal (both sides near 0).
inline constexpr double equality_floor = 1e-10;
/// A check is satisfied when slack >= -satisfaction_tolerance * max(1, |rhs|).
inline constexpr double satisfaction_tolerance = 1e-9;

inline bool approx_equal(double a, double b) {
  const double d = std::abs(a - b);
  return d <= equality_tolerance * std::max(std::abs(a), std::abs(b)) || d <= equality_floor;
}

struct VertexParameters {
  double x_min = 0.0;
  double x_max = 0.0;
  double sigma = 0.0;
  double gamma = 1.0;
  /// Vertices within relative 1e-8 of the extreme, ascending.
  std::vector<Vertex> argmin;
  std::vector<Vertex> argmax;
};

struct EdgeParameters {
  /// x^e = prod_{v in e} x_v, per edge.
  std::vector<double> values;
  double x_edge_min = 0.0;
  double x_edge_max = 0.0;
  double Gamma = 1.0;
  std::vector<std::size_t> argmin;
  std::vector<std::size_t> argmax;
};

struct BoundCheck {
  enum class Kind { inequality, implication, characterization };

  std::string name;
  /// The statement being audited, as a formula.
  std::string anchor;
  Kind kind = Kind::inequality;
  bool applicable = true;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  bool satisfied = true;
  bool equality = false;
  /// Whether equality should hold according to the known characterization.
  std::optional<bool> equality_expected;
  std::optional<bool> equality_consistent;
  std::string notes;

  bool violated() const noexcept {
    return applicable && (!satisfied || equality_consistent == std::optional<bool>(false));
  }
};

inline const char* to_string(BoundCheck::Kind k) {
  switch (k) {
    case BoundCheck::Kind::inequality: return "inequality";
    case BoundCheck::Kind::implication: return "implication";
    case BoundCheck::Kind::characterization: return "characterization";
  }
  return "unknown";
}

namespace detail {

inline BoundCheck inequality(std::string name, std::string anchor, double lhs, double rhs,
                             std::optional<bool> expected = std::nullopt) {
  BoundCheck c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.satisfied = c.slack >= -satisfaction_tolerance * std::max(1.0, std::abs(rhs));
  c.equality = approx_equal(lhs, rhs);
  c.equality_expected = expected;
  if (expected) c.equality_consistent = (c.equality == *expected);
  return c;
}

inline BoundCheck not_applicable(std::string name, std::string anchor, BoundCheck::Kind kind,
                                 std::string why) {
  BoundCheck c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.kind = kind;
  c.applicable = false;
  c.notes = "not applicable: " + std::move(why);
  return c;
}

inline std::optional<bool> if_regular(bool regular) {
  return regular ? std::optional<bool>(true) : std::nullopt;
}

inline void require_pair(const Hypergraph& h, const PrincipalEigenpair& pair) {
  if (pair.x.size() != h.num_vertices())
    throw InvalidInstance("eigenvector dimension does not match the hypergraph");
}

inline std::vector<Vertex> neighbours(const Hypergraph& h, Vertex u) {
  std::set<Vertex> out;
  for (std::size_t j : h.incident(u))
    for (Vertex w : h.edge(j))
      if (w != u) out.insert(w);
  return {out.begin(), out.end()};
}

inline bool only_in_full_edges(const Hypergraph& h, Vertex u) {
  for (std::size_t j : h.incident(u))
    if (h.edge(j).size() != h.order()) return false;
  return true;
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

inline VertexParameters vertex_parameters(std::span<const double> x) {
  if (x.empty()) throw InvalidInstance("empty eigenvector");
  VertexParameters p;
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  p.x_min = *lo;
  p.x_max = *hi;
  p.sigma = p.x_max - p.x_min;
  p.gamma = p.x_max / p.x_min;
  for (Vertex v = 0; v < x.size(); ++v) {
    if (approx_equal(x[v], p.x_min)) p.argmin.push_back(v);
    if (approx_equal(x[v], p.x_max)) p.argmax.push_back(v);
  }
  return p;
}

inline VertexParameters vertex_parameters(const PrincipalEigenpair& pair) {
  return vertex_parameters(pair.x);
}

inline EdgeParameters edge_parameters(const Hypergraph& h, const PrincipalEigenpair& pair) {
  detail::require_pair(h, pair);
  if (!h.is_uniform()) throw NotUniform();
  EdgeParameters p;
  p.values.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    double prod = 1.0;
    for (Vertex v : e) prod *= pair.x[v];
    p.values.push_back(prod);
  }
  auto [lo, hi] = std::minmax_element(p.values.begin(), p.values.end());
  p.x_edge_min = *lo;
  p.x_edge_max = *hi;
  p.Gamma = p.x_edge_max / p.x_edge_min;
  for (std::size_t j = 0; j < p.values.size(); ++j) {
    if (approx_equal(p.values[j], p.x_edge_min)) p.argmin.push_back(j);
    if (approx_equal(p.values[j], p.x_edge_max)) p.argmax.push_back(j);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Ratio gamma = x_max / x_min against degrees and rho

/// Structural condition under which gamma meets one of its degree lower
/// bounds. For the max-degree side: every max-degree vertex sits at x_max and
/// all its neighbours at x_min. This applies when every max-degree vertex lies
/// only in edges of size k; otherwise equality forces regularity.
struct ExtremeDegreeDiagnostic {
  bool only_full_edges = true;
  bool structure = false;
  std::string describe;
};

inline ExtremeDegreeDiagnostic extreme_degree_diagnostic(const Hypergraph& h,
                                                         const PrincipalEigenpair& pair,
                                                         bool max_side) {
  const DegreeProfile deg = degrees(h);
  const VertexParameters vp = vertex_parameters(pair);
  const std::size_t target = max_side ? deg.max : deg.min;
  const double own = max_side ? vp.x_max : vp.x_min;
  const double other = max_side ? vp.x_min : vp.x_max;

  ExtremeDegreeDiagnostic d;
  std::vector<Vertex> cls;
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (deg.degree[v] == target) cls.push_back(v);
  for (Vertex v : cls) d.only_full_edges = d.only_full_edges && detail::only_in_full_edges(h, v);

  std::ostringstream why;
  why << (max_side ? "max" : "min") << "-degree vertices";
  if (d.only_full_edges) {
    d.structure = true;
    for (Vertex u : cls) {
      if (!approx_equal(pair.x[u], own)) {
        d.structure = false;
        why << "; vertex " << u << " not at x_" << (max_side ? "max" : "min");
        break;
      }
      for (Vertex p : detail::neighbours(h, u)) {
        if (!approx_equal(pair.x[p], other)) {
          d.structure = false;
          why << "; neighbour " << p << " of " << u << " not at x_" << (max_side ? "min" : "max");
          break;
        }
      }
      if (!d.structure) break;
    }
    why << " lie only in size-k edges; structural condition "
        << (d.structure ? "holds" : "fails");
  } else {
    d.structure = deg.regular();
    why << " meet a smaller edge; equality requires regularity ("
        << (deg.regular() ? "regular" : "not regular") << ")";
  }
  d.describe = why.str();
  return d;
}

inline std::vector<BoundCheck> check_gamma_lower_bounds(const Hypergraph& h,
                                                        const PrincipalEigenpair& pair) {
  detail::require_pair(h, pair);
  const DegreeProfile deg = degrees(h);
  const VertexParameters vp = vertex_parameters(pair);
  const double km1 = static_cast<double>(h.order() - 1);
  const double Dmax = static_cast<double>(deg.max);
  const double Dmin = static_cast<double>(deg.min);
  const double rho = pair.rho;

  const auto hi = extreme_degree_diagnostic(h, pair, true);
  const auto lo = extreme_degree_diagnostic(h, pair, false);

  std::vector<BoundCheck> out;
  auto c1 = detail::inequality("gamma_vs_max_degree", "gamma >= (Delta/rho)^(1/(k-1))",
                               std::pow(Dmax / rho, 1.0 / km1), vp.gamma, hi.structure);
  c1.notes = hi.describe;
  out.push_back(std::move(c1));

  auto c2 = detail::inequality("gamma_vs_min_degree", "gamma >= (rho/delta)^(1/(k-1))",
                               std::pow(rho / Dmin, 1.0 / km1), vp.gamma, lo.structure);
  c2.notes = lo.describe;
  out.push_back(std::move(c2));

  auto c3 = detail::inequality("gamma_vs_degree_ratio", "gamma >= (Delta/delta)^(1/(2(k-1)))",
                               std::pow(Dmax / Dmin, 1.0 / (2.0 * km1)), vp.gamma,
                               hi.structure && lo.structure);
  c3.notes = "equality needs both degree-side conditions";
  out.push_back(std::move(c3));
  return out;
}

inline BoundCheck check_sigma_lower_bound(const Hypergraph& h, const PrincipalEigenpair& pair) {
  detail::require_pair(h, pair);
  const DegreeProfile deg = degrees(h);
  const VertexParameters vp = vertex_parameters(pair);
  const double k = static_cast<double>(h.order());
  const double n = static_cast<double>(h.num_vertices());
  const double e = 1.0 / (2.0 * (k - 1.0));
  const double top = std::pow(static_cast<double>(deg.max), e);
  const double bottom = std::pow(static_cast<double>(deg.min), e);
  const double bound = (top - bottom) / (top * std::pow(n, 1.0 / k));
  auto c = detail::inequality(
      "sigma_lower_bound",
      "sigma >= (Delta^(1/(2(k-1))) - delta^(1/(2(k-1)))) / (Delta^(1/(2(k-1))) n^(1/k))", bound,
      vp.sigma, deg.regular());
  c.notes = "equality iff regular";
  return c;
}

// ---------------------------------------------------------------------------
// Extreme entries against n, degrees and rho

/// The x_min upper bound (delta/(rho + delta(n-1)))^(1/k) evaluated for an
/// arbitrary positive vector. Equality holds iff some vertex v has
/// x_v = (rho/delta)^(1/k) x_min while every other entry equals x_min.
inline BoundCheck check_min_entry_bound(std::size_t n, std::size_t k, double min_degree,
                                        double rho, std::span<const double> x) {
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  const VertexParameters vp = vertex_parameters(x);
  const double bound = std::pow(min_degree / (rho + min_degree * (nd - 1.0)), 1.0 / kd);

  const double lifted = std::pow(rho / min_degree, 1.0 / kd) * vp.x_min;
  std::size_t off = 0;
  std::optional<Vertex> special;
  for (Vertex v = 0; v < x.size(); ++v) {
    if (!approx_equal(x[v], vp.x_min)) {
      ++off;
      special = v;
    }
  }
  bool structure = false;
  std::string why;
  if (off == 0) {
    structure = approx_equal(lifted, vp.x_min);
    why = "all entries equal x_min";
  } else if (off == 1) {
    structure = approx_equal(x[*special], lifted);
    why = "only vertex " + std::to_string(*special) + " differs from x_min";
  } else {
    why = std::to_string(off) + " vertices differ from x_min";
  }
  why += structure ? "; structural condition holds" : "; structural condition fails";

  auto c = detail::inequality("x_min_vs_rho", "x_min <= (delta/(rho + delta(n-1)))^(1/k)",
                              vp.x_min, bound, structure);
  c.notes = why;
  return c;
}

inline std::vector<BoundCheck> check_extreme_entry_bounds(const Hypergraph& h,
                                                          const PrincipalEigenpair& pair) {
  detail::require_pair(h, pair);
  const DegreeProfile deg = degrees(h);
  const VertexParameters vp = vertex_parameters(pair);
  const std::size_t k_int = h.order();
  const double k = static_cast<double>(k_int);
  const double n = static_cast<double>(h.num_vertices());
  const double Dmax = static_cast<double>(deg.max);
  const double Dmin = static_cast<double>(deg.min);
  const double rho = pair.rho;
  const bool regular = deg.regular();
  const double expo = k / (2.0 * (k - 1.0));

  std::vector<BoundCheck> out;

  const std::optional<bool> count_expect =
      k_int >= 3 ? std::optional<bool>(regular) : std::nullopt;
  const std::string count_note =
      k_int >= 3 ? "equality iff regular (k >= 3)" : "no equality characterization for k = 2";

  const double bound_a = std::pow(std::pow(Dmin / Dmax, expo) + n - 1.0, -1.0 / k);
  auto a = detail::inequality("x_max_vs_degree_ratio",
                              "x_max >= ((delta/Delta)^(k/(2(k-1))) + n - 1)^(-1/k)", bound_a,
                              vp.x_max, count_expect);
  a.notes = count_note;
  out.push_back(std::move(a));

  const double bound_b = std::pow(std::pow(Dmax / Dmin, expo) + n - 1.0, -1.0 / k);
  auto b = detail::inequality("x_min_vs_degree_ratio",
                              "x_min <= ((Delta/delta)^(k/(2(k-1))) + n - 1)^(-1/k)", vp.x_min,
                              bound_b, count_expect);
  b.notes = count_note;
  out.push_back(std::move(b));

  const double bound_c = std::pow(rho / (n * deg.average), 1.0 / k);
  auto c = detail::inequality("x_max_vs_average_degree", "x_max >= (rho/(n d_avg))^(1/k)",
                              bound_c, vp.x_max, regular);
  c.notes = "equality iff regular";
  out.push_back(std::move(c));

  double power_sum = 0.0;
  for (std::size_t d : deg.degree) power_sum += std::pow(static_cast<double>(d), k / (k - 1.0));
  const double bound_d = std::pow(rho, 1.0 / (k - 1.0)) / std::pow(power_sum, 1.0 / k);
  auto d = detail::inequality("x_max_vs_degree_power_sum",
                              "x_max >= rho^(1/(k-1)) / (sum_v d(v)^(k/(k-1)))^(1/k)", bound_d,
                              vp.x_max, regular);
  d.notes = "equality iff regular";
  out.push_back(std::move(d));

  BoundCheck e = check_min_entry_bound(h.num_vertices(), k_int, Dmin, rho, pair.x);
  const double bound_e = e.rhs;
  out.push_back(std::move(e));

  const std::string cmp_anchor =
      "rho >= (Delta^k delta^(k-1))^(1/(2(k-1))) implies "
      "(delta/(rho + delta(n-1)))^(1/k) <= ((Delta/delta)^(k/(2(k-1))) + n - 1)^(-1/k)";
  const double threshold =
      std::pow(std::pow(Dmax, k) * std::pow(Dmin, k - 1.0), 1.0 / (2.0 * (k - 1.0)));
  const bool flag = rho >= threshold - satisfaction_tolerance * std::max(1.0, threshold);
  if (flag) {
    auto cmp = detail::inequality("x_min_bound_comparison", cmp_anchor, bound_e, bound_b);
    cmp.kind = BoundCheck::Kind::implication;
    cmp.notes = "premise holds: rho=" + detail::fmt(rho) + " >= " + detail::fmt(threshold) +
                (approx_equal(rho, threshold) ? " (tight)" : "");
    out.push_back(std::move(cmp));
  } else {
    out.push_back(detail::not_applicable(
        "x_min_bound_comparison", cmp_anchor, BoundCheck::Kind::implication,
        "premise fails: rho=" + detail::fmt(rho) + " < " + detail::fmt(threshold) +
            "; bounds " + detail::fmt(bound_e) + " vs " + detail::fmt(bound_b)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge values x^e (uniform hypergraphs)

inline std::vector<BoundCheck> check_edge_value_bounds(const Hypergraph& h,
                                                       const PrincipalEigenpair& pair) {
  const EdgeParameters ep = edge_parameters(h, pair);
  const DegreeProfile deg = degrees(h);
  const VertexParameters vp = vertex_parameters(pair);
  const double k = static_cast<double>(h.order());
  const double m = static_cast<double>(h.num_edges());
  const double rho = pair.rho;
  const double Dmax = static_cast<double>(deg.max);
  const double Dmin = static_cast<double>(deg.min);
  const auto expect = detail::if_regular(deg.regular());
  const double min_k = std::pow(vp.x_min, k);
  const double max_k = std::pow(vp.x_max, k);
  const double mean = rho / (k * m);

  std::vector<BoundCheck> out;
  out.push_back(detail::inequality("edge_min_lower", "(delta/rho) x^min <= x_min^k",
                                   Dmin / rho * ep.x_edge_min, min_k, expect));
  out.push_back(detail::inequality("edge_min_upper", "x_min^k <= x^min", min_k, ep.x_edge_min,
                                   expect));
  out.push_back(detail::inequality("edge_max_lower", "x^max <= x_max^k", ep.x_edge_max, max_k,
                                   expect));
  out.push_back(detail::inequality("edge_max_upper", "x_max^k <= (Delta/rho) x^max", max_k,
                                   Dmax / rho * ep.x_edge_max, expect));
  out.push_back(detail::inequality("edge_min_vs_rho", "x^min <= rho/(k m)", ep.x_edge_min, mean,
                                   expect));
  out.push_back(detail::inequality("edge_max_vs_rho", "rho/(k m) <= x^max", mean, ep.x_edge_max,
                                   expect));
  out.push_back(detail::inequality("Gamma_gamma_lower", "Gamma^(1/k) <= gamma",
                                   std::pow(ep.Gamma, 1.0 / k), vp.gamma, expect));
  out.push_back(detail::inequality("Gamma_gamma_upper", "gamma <= ((Delta/delta) Gamma)^(1/k)",
                                   vp.gamma, std::pow(Dmax / Dmin * ep.Gamma, 1.0 / k), expect));
  for (auto& c : out) c.notes = "equality whenever regular";
  return out;
}

inline constexpr const char* gamma_one_anchor =
    "Gamma = 1 iff prod_{v in e} d(v) is the same for every edge; then rho = D^(1/k) and "
    "x_v = (d(v)/(k m))^(1/k)";

/// Gamma = 1 exactly when the degree product over each edge is constant.
/// When constant (= D), also compares rho with D^(1/k) and x with its closed form.
inline BoundCheck check_gamma_one_characterization(const Hypergraph& h,
                                                   const PrincipalEigenpair& pair) {
  const EdgeParameters ep = edge_parameters(h, pair);
  const DegreeProfile deg = degrees(h);
  const double k = static_cast<double>(h.order());
  const double m = static_cast<double>(h.num_edges());

  std::vector<BigInt> products;
  for (const Edge& e : h.edges()) {
    BigInt p = 1;
    for (Vertex v : e) p *= deg.degree[v];
    products.push_back(p);
  }
  const bool constant = std::all_of(products.begin(), products.end(),
                                    [&](const BigInt& p) { return p == products.front(); });

  BoundCheck c;
  c.name = "Gamma_one_iff_constant_degree_product";
  c.anchor = gamma_one_anchor;
  c.kind = BoundCheck::Kind::characterization;
  c.lhs = 1.0;
  c.rhs = ep.Gamma;
  c.slack = ep.Gamma - 1.0;
  c.equality = std::abs(ep.Gamma - 1.0) <= equality_tolerance;
  c.equality_expected = constant;
  c.equality_consistent = c.equality == constant;

  std::ostringstream notes;
  notes << "degree products " << (constant ? "constant" : "not constant");
  bool closed_form_ok = true;
  if (constant) {
    const double D = products.front().convert_to<double>();
    const double rho_closed = std::pow(D, 1.0 / k);
    const double rho_dev = std::abs(pair.rho - rho_closed);
    double x_dev = 0.0;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      const double closed = std::pow(static_cast<double>(deg.degree[v]) / (k * m), 1.0 / k);
      x_dev = std::max(x_dev, std::abs(pair.x[v] - closed));
    }
    closed_form_ok = rho_dev <= equality_tolerance * std::max(1.0, rho_closed) &&
                     x_dev <= equality_tolerance;
    notes << " (D=" << products.front() << "); |rho - D^(1/k)|=" << detail::fmt(rho_dev)
          << ", max |x_v - (d(v)/(km))^(1/k)|=" << detail::fmt(x_dev);
  }
  c.satisfied = ep.Gamma >= 1.0 - satisfaction_tolerance && closed_form_ok;
  c.notes = notes.str();
  return c;
}

// ---------------------------------------------------------------------------
// Full report

struct SpectralReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t rank = 0;
  bool order_overridden = false;
  bool uniform = false;
  DegreeProfile degree_profile;
  PrincipalEigenpair pair;
  double tolerance = 0.0;
  VertexParameters vertex;
  std::optional<EdgeParameters> edge;
  std::vector<BoundCheck> checks;

  std::size_t violations() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.violated(); }));
  }
  bool all_satisfied() const { return violations() == 0; }
};

inline const std::vector<std::pair<std::string, std::string>>& uniform_only_checks() {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"edge_min_lower", "(delta/rho) x^min <= x_min^k"},
      {"edge_min_upper", "x_min^k <= x^min"},
      {"edge_max_lower", "x^max <= x_max^k"},
      {"edge_max_upper", "x_max^k <= (Delta/rho) x^max"},
      {"edge_min_vs_rho", "x^min <= rho/(k m)"},
      {"edge_max_vs_rho", "rho/(k m) <= x^max"},
      {"Gamma_gamma_lower", "Gamma^(1/k) <= gamma"},
      {"Gamma_gamma_upper", "gamma <= ((Delta/delta) Gamma)^(1/k)"},
      {"Gamma_one_iff_constant_degree_product", gamma_one_anchor},
  };
  return names;
}

inline SpectralReport full_report(const Hypergraph& h, const SolverConfig& cfg = {}) {
  SpectralReport r;
  r.pair = solve_principal(h, cfg);
  r.n = h.num_vertices();
  r.m = h.num_edges();
  r.k = h.order();
  r.rank = h.rank();
  r.order_overridden = h.order_overridden();
  r.uniform = h.is_uniform();
  r.degree_profile = degrees(h);
  r.tolerance = cfg.tolerance;
  r.vertex = vertex_parameters(r.pair);

  for (auto& c : check_gamma_lower_bounds(h, r.pair)) r.checks.push_back(std::move(c));
  r.checks.push_back(check_sigma_lower_bound(h, r.pair));
  for (auto& c : check_extreme_entry_bounds(h, r.pair)) r.checks.push_back(std::move(c));

  if (r.uniform) {
    r.edge = edge_parameters(h, r.pair);
    for (auto& c : check_edge_value_bounds(h, r.pair)) r.checks.push_back(std::move(c));
    r.checks.push_back(check_gamma_one_characterization(h, r.pair));
  } else {
    for (const auto& [name, anchor] : uniform_only_checks()) {
      const auto kind = name == "Gamma_one_iff_constant_degree_product"
                            ? BoundCheck::Kind::characterization
                            : BoundCheck::Kind::inequality;
      r.checks.push_back(detail::not_applicable(
          name, anchor, kind, "edge parameters defined for uniform hypergraphs only"));
    }
  }
  return r;
}

}  // namespace hyperspec
