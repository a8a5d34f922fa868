#pragma once

// Subcommand bodies behind the command-line tool. Each returns the process
// exit code: 0 success, 1 input or solver error, 2 a violated check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperspec/analysis.hpp"
#include "hyperspec/audit.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/expansion.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/report_io.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

enum class OutputFormat { json, table };

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_violation = 2;

/// Maximum relative deviation tolerated by `oracle`.
inline constexpr double oracle_tolerance = 1e-12;

inline Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_hypergraph(in);
}

inline int cmd_analyze(const std::string& path, const SolverConfig& cfg, OutputFormat format,
                       std::ostream& out, std::ostream& err) {
  SpectralReport report;
  try {
    const Hypergraph h = load_hypergraph(path);
    report = full_report(h, cfg);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_error;
  }
  if (format == OutputFormat::json)
    write_json(out, to_json(report));
  else
    write_table(out, report);
  return report.all_satisfied() ? exit_ok : exit_violation;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

inline std::size_t family_number(const std::string& text, const char* what) {
  return parse_size(text, 0, what);
}

}  // namespace detail

/// Builds an instance from `star:n`, `path:n`, `complete:n:k` or
/// `power:<base file>:s:r`.
inline Hypergraph generate_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  if (colon == std::string::npos) throw InvalidInstance("family spec needs parameters: " + spec);
  const std::string rest = spec.substr(colon + 1);
  const auto parts = detail::split(rest, ':');
  if (family == "star" && parts.size() == 1)
    return generate_star(detail::family_number(parts[0], "star size"));
  if (family == "path" && parts.size() == 1)
    return generate_path(detail::family_number(parts[0], "path size"));
  if (family == "complete" && parts.size() == 2)
    return generate_complete_uniform(detail::family_number(parts[0], "vertex count"),
                                     detail::family_number(parts[1], "edge size"));
  if (family == "power") {
    // the base path may itself contain ':'; s and r are the last two fields
    const auto last = rest.rfind(':');
    const auto mid = last == std::string::npos ? std::string::npos : rest.rfind(':', last - 1);
    if (mid == std::string::npos || mid == 0)
      throw InvalidInstance("power family needs power:<base>:s:r");
    const std::string base_path = rest.substr(0, mid);
    const std::size_t s = detail::family_number(rest.substr(mid + 1, last - mid - 1), "block size s");
    const std::size_t r = detail::family_number(rest.substr(last + 1), "edge size r");
    return generate_power(load_hypergraph(base_path), s, r);
  }
  throw InvalidInstance("unknown family spec '" + spec + "'");
}

inline int cmd_generate(const std::string& spec, std::ostream& out, std::ostream& err) {
  try {
    serialize(generate_family(spec), out);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_error;
  }
  return exit_ok;
}

struct OracleResult {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double dense_deviation = 0.0;
  double enumeration_deviation = 0.0;
  double alternating_deviation = 0.0;
  double quadratic_form_deviation = 0.0;
  bool pass() const {
    return dense_deviation <= oracle_tolerance && enumeration_deviation <= oracle_tolerance;
  }
};

namespace detail {

inline double max_relative_deviation(std::span<const double> got, std::span<const double> want) {
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double diff = std::abs(got[i] - want[i]);
    if (diff == 0.0) continue;
    const double scale = std::max(std::abs(got[i]), std::abs(want[i]));
    worst = std::max(worst, diff / scale);
  }
  return worst;
}

}  // namespace detail

/// Cross-validates the implicit operator against the dense tensor and against
/// literal enumeration of expanded edges on `trials` random positive vectors.
inline OracleResult run_oracle(const Hypergraph& h, std::size_t trials, std::uint64_t seed) {
  const std::size_t k = h.order();
  for (const Edge& e : h.edges()) detail::check_enumeration_cap(e.size(), k, k);
  const DenseTensor dense = materialize_dense(h);
  AdjacencyOperator op(h);

  OracleResult res;
  res.trials = trials;
  res.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::vector<double> x = random_positive_vector(rng, h.num_vertices());
    const std::vector<double> y = op.apply(x);
    const std::vector<double> y_dense = contract(dense, x);

    std::vector<double> y_enum(h.num_vertices(), 0.0);
    std::vector<double> y_alt(h.num_vertices(), 0.0);
    for (Vertex i = 0; i < h.num_vertices(); ++i)
      for (std::size_t j : h.incident(i)) {
        y_enum[i] += op.weight(j) * enumerate_edge_sum_from(h.edge(j), i, x, k);
        y_alt[i] += op.weight(j) * edge_sum_from_alternating(h.edge(j), i, x, k);
      }

    double xy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) xy += x[i] * y[i];
    const double q = op.quadratic_form(x);

    res.dense_deviation = std::max(res.dense_deviation, detail::max_relative_deviation(y, y_dense));
    res.enumeration_deviation =
        std::max(res.enumeration_deviation, detail::max_relative_deviation(y, y_enum));
    res.alternating_deviation =
        std::max(res.alternating_deviation, detail::max_relative_deviation(y, y_alt));
    if (q != xy)
      res.quadratic_form_deviation =
          std::max(res.quadratic_form_deviation, std::abs(q - xy) / std::max(std::abs(q), std::abs(xy)));
  }
  return res;
}

inline int cmd_oracle(const std::string& path, std::size_t trials, std::uint64_t seed,
                      OutputFormat format, std::ostream& out, std::ostream& err) {
  OracleResult res;
  try {
    res = run_oracle(load_hypergraph(path), trials, seed);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_error;
  }
  if (format == OutputFormat::json) {
    Json j;
    j["trials"] = res.trials;
    j["seed"] = res.seed;
    j["tolerance"] = oracle_tolerance;
    j["max_rel_dev_dense"] = res.dense_deviation;
    j["max_rel_dev_enumeration"] = res.enumeration_deviation;
    j["max_rel_dev_alternating"] = res.alternating_deviation;
    j["max_rel_dev_quadratic_form"] = res.quadratic_form_deviation;
    j["pass"] = res.pass();
    write_json(out, j);
  } else {
    out << "trials " << res.trials << " seed " << res.seed << "\n"
        << "dense       " << res.dense_deviation << "\n"
        << "enumeration " << res.enumeration_deviation << "\n"
        << "alternating " << res.alternating_deviation << " (informational)\n"
        << "x^T A x     " << res.quadratic_form_deviation << " (informational)\n"
        << (res.pass() ? "PASS" : "FAIL") << "\n";
  }
  return res.pass() ? exit_ok : exit_error;
}

inline int cmd_audit_suite(std::uint64_t seed, std::size_t count, const SolverConfig& cfg,
                           OutputFormat format, std::ostream& out, std::ostream& /*err*/) {
  const AuditSummary summary = run_audit(seed, count, cfg);
  if (format == OutputFormat::json)
    write_json(out, to_json(summary));
  else
    write_table(out, summary);
  return summary.failed() == 0 ? exit_ok : exit_violation;
}

}  // namespace hyperspec
