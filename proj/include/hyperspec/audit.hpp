#pragma once

// Fixed instance families plus a seeded random stream, each run through the
// full report.

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperspec/analysis.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/random.hpp"

namespace hyperspec {

struct NamedInstance {
  std::string name;
  Hypergraph h;
};

/// Stars, paths, complete (hyper)graphs, a mixed-cardinality instance and the
/// generalized powers of regular bases and of stars with r <= 6, s <= 2.
inline std::vector<NamedInstance> fixed_families() {
  std::vector<NamedInstance> out;
  for (std::size_t n = 3; n <= 10; ++n) out.push_back({"star:" + std::to_string(n), generate_star(n)});
  for (std::size_t n = 4; n <= 5; ++n) out.push_back({"path:" + std::to_string(n), generate_path(n)});
  for (std::size_t n = 3; n <= 6; ++n)
    out.push_back({"complete:" + std::to_string(n) + ":2", generate_complete_uniform(n, 2)});
  for (std::size_t n = 4; n <= 6; ++n)
    out.push_back({"complete:" + std::to_string(n) + ":3", generate_complete_uniform(n, 3)});
  out.push_back({"complete:5:4", generate_complete_uniform(5, 4)});
  out.push_back({"mixed:{01,012}", Hypergraph(3, {{0, 1}, {0, 1, 2}})});

  struct Base {
    std::string name;
    Hypergraph h;
  };
  const std::vector<Base> bases = {
      {"complete:3:2", generate_complete_uniform(3, 2)},
      {"complete:4:2", generate_complete_uniform(4, 2)},
      {"complete:4:3", generate_complete_uniform(4, 3)},
      {"star:3", generate_star(3)},
      {"star:4", generate_star(4)},
      {"star:5", generate_star(5)},
  };
  for (const auto& base : bases) {
    const std::size_t k = base.h.order();
    for (std::size_t s = 1; s <= 2; ++s)
      for (std::size_t r = k * s; r <= 6; ++r) {
        if (s == 1 && r == k) continue;  // the base itself
        out.push_back({"power:" + base.name + ":" + std::to_string(s) + ":" + std::to_string(r),
                       generate_power(base.h, s, r)});
      }
  }
  return out;
}

/// Instances 0..count-1 of the seeded random stream.
inline std::vector<NamedInstance> random_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<NamedInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "random-%04zu", i);
    out.push_back({name, random_connected_hypergraph(rng)});
  }
  return out;
}

struct AuditEntry {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  bool uniform = false;
  std::optional<SpectralReport> report;
  std::string error;

  bool passed() const { return report && report->all_satisfied(); }
};

struct AuditSummary {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<AuditEntry> entries;

  std::size_t failed() const {
    std::size_t f = 0;
    for (const auto& e : entries) f += e.passed() ? 0 : 1;
    return f;
  }
};

inline AuditEntry audit_instance(const NamedInstance& inst, const SolverConfig& cfg) {
  AuditEntry e;
  e.name = inst.name;
  e.n = inst.h.num_vertices();
  e.m = inst.h.num_edges();
  e.k = inst.h.order();
  e.uniform = inst.h.is_uniform();
  try {
    e.report = full_report(inst.h, cfg);
  } catch (const Error& ex) {
    e.error = ex.what();
  }
  return e;
}

/// Fixed families first, then `count` random instances, in that order.
inline AuditSummary run_audit(std::uint64_t seed, std::size_t count, const SolverConfig& cfg = {}) {
  AuditSummary s;
  s.seed = seed;
  s.count = count;
  for (const auto& inst : fixed_families()) s.entries.push_back(audit_instance(inst, cfg));
  for (const auto& inst : random_instances(seed, count)) s.entries.push_back(audit_instance(inst, cfg));
  return s;
}

}  // namespace hyperspec
