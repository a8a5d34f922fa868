#pragma once

// JSON and table rendering of reports. JSON keys keep insertion order and
// floating-point values are printed with 17 significant digits; non-finite
// values become null.
//
// Report layout:
//   instance         {n, m, k, rank, k_overridden, uniform}
//   solver           {rho, residual, iterations, bracket_lo, bracket_hi, tolerance, shift}
//   degrees          {degree[], max, min, average, regular}
//   vertex_parameters{x[], x_min, x_max, sigma, gamma, argmin[], argmax[]}
//   edge_parameters  {applicable, values[], x_edge_min, x_edge_max, Gamma, argmin[], argmax[]}
//   checks[]         {name, anchor, kind, applicable, lhs, rhs, slack, satisfied,
//                     equality, equality_expected, equality_consistent, notes}
//   summary          {checks, applicable, violations, all_satisfied}

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <string>

#include <json.hpp>

#include "hyperspec/analysis.hpp"
#include "hyperspec/audit.hpp"

namespace hyperspec {

using Json = nlohmann::ordered_json;

namespace detail {

inline void write_json_value(std::ostream& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(it.key()).dump() << ": ";
        write_json_value(out, it.value(), indent, depth + 1);
      }
      out << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      bool scalar = std::none_of(j.begin(), j.end(), [](const Json& v) {
        return v.is_object() || v.is_array();
      });
      if (scalar) {
        out << '[';
        for (std::size_t t = 0; t < j.size(); ++t) {
          if (t) out << ", ";
          write_json_value(out, j[t], indent, depth + 1);
        }
        out << ']';
        return;
      }
      out << "[\n";
      for (std::size_t t = 0; t < j.size(); ++t) {
        if (t) out << ",\n";
        out << pad;
        write_json_value(out, j[t], indent, depth + 1);
      }
      out << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf;
      return;
    }
    default:
      out << j.dump();
  }
}

inline Json optional_bool(const std::optional<bool>& b) {
  return b ? Json(*b) : Json(nullptr);
}

}  // namespace detail

inline void write_json(std::ostream& out, const Json& j) {
  detail::write_json_value(out, j, 2, 0);
  out << '\n';
}

inline Json to_json(const BoundCheck& c) {
  Json j;
  j["name"] = c.name;
  j["anchor"] = c.anchor;
  j["kind"] = to_string(c.kind);
  j["applicable"] = c.applicable;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["slack"] = c.slack;
  j["satisfied"] = c.satisfied;
  j["equality"] = c.equality;
  j["equality_expected"] = detail::optional_bool(c.equality_expected);
  j["equality_consistent"] = detail::optional_bool(c.equality_consistent);
  j["notes"] = c.notes;
  return j;
}

inline Json to_json(const SpectralReport& r) {
  Json j;
  j["instance"] = {{"n", r.n}, {"m", r.m}, {"k", r.k}, {"rank", r.rank},
                   {"k_overridden", r.order_overridden}, {"uniform", r.uniform}};
  j["solver"] = {{"rho", r.pair.rho},
                 {"residual", r.pair.residual},
                 {"iterations", r.pair.iterations},
                 {"bracket_lo", r.pair.bracket.lo},
                 {"bracket_hi", r.pair.bracket.hi},
                 {"tolerance", r.tolerance},
                 {"shift", r.pair.shift}};
  j["degrees"] = {{"degree", r.degree_profile.degree},
                  {"max", r.degree_profile.max},
                  {"min", r.degree_profile.min},
                  {"average", r.degree_profile.average},
                  {"regular", r.degree_profile.regular()}};
  j["vertex_parameters"] = {{"x", r.pair.x},
                            {"x_min", r.vertex.x_min},
                            {"x_max", r.vertex.x_max},
                            {"sigma", r.vertex.sigma},
                            {"gamma", r.vertex.gamma},
                            {"argmin", r.vertex.argmin},
                            {"argmax", r.vertex.argmax}};
  if (r.edge) {
    j["edge_parameters"] = {{"applicable", true},
                            {"values", r.edge->values},
                            {"x_edge_min", r.edge->x_edge_min},
                            {"x_edge_max", r.edge->x_edge_max},
                            {"Gamma", r.edge->Gamma},
                            {"argmin", r.edge->argmin},
                            {"argmax", r.edge->argmax}};
  } else {
    j["edge_parameters"] = {{"applicable", false},
                            {"reason", "edge parameters defined for uniform hypergraphs only"}};
  }
  Json checks = Json::array();
  std::size_t applicable = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c));
    applicable += c.applicable ? 1 : 0;
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"checks", r.checks.size()},
                  {"applicable", applicable},
                  {"violations", r.violations()},
                  {"all_satisfied", r.all_satisfied()}};
  return j;
}

inline Json to_json(const AuditSummary& s) {
  Json j;
  j["seed"] = s.seed;
  j["count"] = s.count;
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json item;
    item["name"] = e.name;
    item["n"] = e.n;
    item["m"] = e.m;
    item["k"] = e.k;
    item["uniform"] = e.uniform;
    if (e.report) {
      item["rho"] = e.report->pair.rho;
      item["iterations"] = e.report->pair.iterations;
      std::size_t applicable = 0;
      Json violated = Json::array();
      Json equalities = Json::array();
      for (const auto& c : e.report->checks) {
        applicable += c.applicable ? 1 : 0;
        if (c.violated()) violated.push_back(c.name);
        if (c.applicable && c.equality) equalities.push_back(c.name);
      }
      item["checks_applicable"] = applicable;
      item["equalities"] = std::move(equalities);
      item["violations"] = std::move(violated);
      item["error"] = nullptr;
    } else {
      item["rho"] = nullptr;
      item["iterations"] = nullptr;
      item["checks_applicable"] = 0;
      item["equalities"] = Json::array();
      item["violations"] = Json::array();
      item["error"] = e.error;
    }
    item["passed"] = e.passed();
    entries.push_back(std::move(item));
  }
  j["instances"] = std::move(entries);
  j["summary"] = {{"instances", s.entries.size()},
                  {"passed", s.entries.size() - s.failed()},
                  {"failed", s.failed()}};
  return j;
}

// ---------------------------------------------------------------------------
// Tables

inline void write_table(std::ostream& out, const SpectralReport& r) {
  const auto flags = out.flags();
  out << "n=" << r.n << " m=" << r.m << " k=" << r.k << " rank=" << r.rank
      << (r.order_overridden ? " (k set explicitly)" : "") << (r.uniform ? " uniform" : " non-uniform")
      << "\n";
  out << std::setprecision(12);
  out << "rho=" << r.pair.rho << "  residual=" << r.pair.residual
      << "  iterations=" << r.pair.iterations << "  bracket=[" << r.pair.bracket.lo << ", "
      << r.pair.bracket.hi << "]\n";
  out << "Delta=" << r.degree_profile.max << " delta=" << r.degree_profile.min
      << " d_avg=" << r.degree_profile.average << (r.degree_profile.regular() ? " regular" : "")
      << "\n";
  out << "x_min=" << r.vertex.x_min << " x_max=" << r.vertex.x_max << " sigma=" << r.vertex.sigma
      << " gamma=" << r.vertex.gamma << "\n";
  if (r.edge)
    out << "x^min=" << r.edge->x_edge_min << " x^max=" << r.edge->x_edge_max
        << " Gamma=" << r.edge->Gamma << "\n";
  out << "\n";
  out << std::left << std::setw(40) << "check" << std::right << std::setw(20) << "lhs"
      << std::setw(20) << "rhs" << std::setw(12) << "status" << "  eq\n";
  for (const auto& c : r.checks) {
    out << std::left << std::setw(40) << c.name << std::right;
    if (!c.applicable) {
      out << std::setw(20) << "-" << std::setw(20) << "-" << std::setw(12) << "n/a" << "\n";
      continue;
    }
    out << std::setw(20) << c.lhs << std::setw(20) << c.rhs << std::setw(12)
        << (c.violated() ? "VIOLATED" : "ok") << "  " << (c.equality ? "=" : "") << "\n";
  }
  out << "\n" << r.violations() << " violation(s)\n";
  out.flags(flags);
}

inline void write_table(std::ostream& out, const AuditSummary& s) {
  out << std::left << std::setw(32) << "instance" << std::right << std::setw(5) << "n"
      << std::setw(5) << "m" << std::setw(4) << "k" << std::setw(22) << "rho" << "  status\n";
  const auto flags = out.flags();
  out << std::setprecision(15);
  for (const auto& e : s.entries) {
    out << std::left << std::setw(32) << e.name << std::right << std::setw(5) << e.n
        << std::setw(5) << e.m << std::setw(4) << e.k << std::setw(22);
    if (e.report)
      out << e.report->pair.rho;
    else
      out << "-";
    out << "  " << (e.passed() ? "ok" : "FAIL") << "\n";
    if (!e.error.empty()) out << "    error: " << e.error << "\n";
    if (e.report)
      for (const auto& c : e.report->checks)
        if (c.violated()) out << "    violated: " << c.name << "\n";
  }
  out.flags(flags);
  out << (s.entries.size() - s.failed()) << "/" << s.entries.size() << " instances pass\n";
}

}  // namespace hyperspec
