#pragma once

// General (non-uniform) hypergraphs: storage, degree statistics, connectivity,
// the plain-text instance format and the generator families.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperspec/errors.hpp"

namespace hyperspec {

using Vertex = std::size_t;
/// Strictly increasing vertex indices.
using Edge = std::vector<Vertex>;

struct HypergraphOptions {
  /// Tensor order k. Defaults to the rank (and to 2 when the rank is below 2).
  std::optional<std::size_t> order;
  /// Edges of cardinality one are rejected unless this is set.
  bool allow_singleton_edges = false;
};

class Hypergraph {
 public:
  Hypergraph(std::size_t n, std::vector<Edge> edges,
             HypergraphOptions options = {},
             std::vector<std::string> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ == 0) throw InvalidInstance("hypergraph needs at least one vertex");
    if (!labels_.empty() && labels_.size() != n_)
      throw InvalidInstance("label count does not match vertex count");

    for (std::size_t j = 0; j < edges_.size(); ++j) {
      Edge& e = edges_[j];
      if (e.empty()) throw InvalidInstance("edge " + std::to_string(j) + " is empty");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw InvalidInstance("edge " + std::to_string(j) + " repeats a vertex");
      if (e.back() >= n_)
        throw InvalidInstance("edge " + std::to_string(j) + " references vertex " +
                              std::to_string(e.back()) + " >= n");
      if (e.size() == 1 && !options.allow_singleton_edges)
        throw InvalidInstance("edge " + std::to_string(j) +
                              " is a singleton; singleton edges are disabled");
      rank_ = std::max(rank_, e.size());
    }

    std::vector<std::size_t> order(edges_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges_[a] < edges_[b];
    });
    for (std::size_t j = 1; j < order.size(); ++j) {
      if (edges_[order[j]] == edges_[order[j - 1]])
        throw InvalidInstance("duplicate edge: edges " + std::to_string(order[j - 1]) +
                              " and " + std::to_string(order[j]) + " are equal");
    }

    const std::size_t natural = std::max<std::size_t>(rank_, 2);
    if (options.order) {
      if (*options.order < 2) throw InvalidInstance("tensor order k must be at least 2");
      if (*options.order < rank_)
        throw InvalidInstance("tensor order k=" + std::to_string(*options.order) +
                              " is below the rank " + std::to_string(rank_));
      order_ = *options.order;
    } else {
      order_ = natural;
    }
    order_overridden_ = order_ != natural;
    singletons_allowed_ = options.allow_singleton_edges;

    incidence_.resize(n_);
    for (std::size_t j = 0; j < edges_.size(); ++j)
      for (Vertex v : edges_[j]) incidence_[v].push_back(j);
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  /// Tensor order k.
  std::size_t order() const noexcept { return order_; }
  /// Maximum edge cardinality.
  std::size_t rank() const noexcept { return rank_; }
  /// True when k was set explicitly to something other than the rank.
  bool order_overridden() const noexcept { return order_overridden_; }
  bool singletons_allowed() const noexcept { return singletons_allowed_; }

  /// Every edge has exactly k vertices.
  bool is_uniform() const noexcept {
    return !edges_.empty() &&
           std::all_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.size() == order_; });
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t j) const { return edges_.at(j); }
  /// Indices of edges containing v, ascending.
  std::span<const std::size_t> incident(Vertex v) const { return incidence_.at(v); }
  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
  }

  HypergraphOptions options() const {
    HypergraphOptions o;
    if (order_overridden_) o.order = order_;
    o.allow_singleton_edges = singletons_allowed_;
    return o;
  }

  /// Structural equality: same n, k and edge list (labels ignored).
  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::size_t rank_ = 0;
  std::size_t order_ = 2;
  bool order_overridden_ = false;
  bool singletons_allowed_ = false;
};

// ---------------------------------------------------------------------------
// Degrees and connectivity

struct DegreeProfile {
  std::vector<std::size_t> degree;
  std::size_t max = 0;
  std::size_t min = 0;
  double average = 0.0;

  bool regular() const noexcept { return max == min; }
};

inline DegreeProfile degrees(const Hypergraph& h) {
  DegreeProfile p;
  p.degree.resize(h.num_vertices());
  std::size_t total = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    p.degree[v] = h.degree(v);
    total += p.degree[v];
  }
  auto [lo, hi] = std::minmax_element(p.degree.begin(), p.degree.end());
  p.min = *lo;
  p.max = *hi;
  p.average = static_cast<double>(total) / static_cast<double>(h.num_vertices());
  return p;
}

struct ConnectivityResult {
  bool connected = false;
  /// Component index per vertex, numbered by smallest member.
  std::vector<std::size_t> component;
  std::size_t num_components = 0;
};

inline ConnectivityResult connectivity(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  ConnectivityResult out;
  out.component.assign(n, unvisited);
  std::vector<bool> edge_seen(h.num_edges(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (out.component[root] != unvisited) continue;
    const std::size_t id = out.num_components++;
    out.component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t j : h.incident(v)) {
        if (edge_seen[j]) continue;
        edge_seen[j] = true;
        for (Vertex w : h.edge(j)) {
          if (out.component[w] == unvisited) {
            out.component[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
  }
  out.connected = out.num_components == 1;
  return out;
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   %k=4                 tensor order override
//   %vertices a b c d    declare labels (fixes their order, allows isolated vertices)
//   %allow-singletons    accept one-vertex edges
//   a b c                one edge per line

struct ParseOptions {
  /// Every vertex token in an edge line must have been declared by %vertices.
  bool strict = false;
  bool allow_singleton_edges = false;
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::size_t parse_size(const std::string& text, std::size_t line,
                              const char* what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid ") + what + " '" + text + "'", line);
  }
  if (pos != text.size() || text.front() == '-')
    throw ParseError(std::string("invalid ") + what + " '" + text + "'", line);
  return static_cast<std::size_t>(value);
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::istream& in, const ParseOptions& opts = {}) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> edge_line;
  std::optional<std::size_t> order;
  bool singletons = opts.allow_singleton_edges;

  auto intern = [&](const std::string& tok) {
    auto [it, inserted] = index.emplace(tok, labels.size());
    if (inserted) labels.push_back(tok);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens.front().front() == '%') {
      const std::string& head = tokens.front();
      if (head.rfind("%k=", 0) == 0 && tokens.size() == 1) {
        if (order) throw ParseError("repeated %k directive", line_no);
        order = detail::parse_size(head.substr(3), line_no, "tensor order");
      } else if (head == "%vertices") {
        for (std::size_t t = 1; t < tokens.size(); ++t) intern(tokens[t]);
      } else if (head == "%allow-singletons" && tokens.size() == 1) {
        singletons = true;
      } else {
        throw ParseError("unknown directive '" + head + "'", line_no);
      }
      continue;
    }

    Edge e;
    e.reserve(tokens.size());
    for (const auto& tok : tokens) {
      if (opts.strict && !index.contains(tok))
        throw ParseError("edge references undeclared vertex '" + tok + "'", line_no);
      e.push_back(intern(tok));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ParseError("edge lists a vertex more than once", line_no);
    if (e.size() == 1 && !singletons)
      throw ParseError("singleton edge '" + tokens.front() +
                           "' (enable with %allow-singletons)",
                       line_no);
    auto [it, inserted] = edge_line.emplace(e, line_no);
    if (!inserted)
      throw ParseError("duplicate edge {" + line + "} (first seen on line " +
                           std::to_string(it->second) + ")",
                       line_no);
    edges.push_back(std::move(e));
  }

  if (labels.empty()) throw ParseError("instance has no vertices", 0);
  HypergraphOptions hopts;
  hopts.order = order;
  hopts.allow_singleton_edges = singletons;
  try {
    const std::size_t n = labels.size();
    return Hypergraph(n, std::move(edges), hopts, std::move(labels));
  } catch (const InvalidInstance& ex) {
    throw ParseError(ex.what(), 0);
  }
}

inline Hypergraph parse_hypergraph(const std::string& text, const ParseOptions& opts = {}) {
  std::istringstream in(text);
  return parse_hypergraph(in, opts);
}

/// Writes the instance with dense integer labels. A %vertices line is emitted
/// only when edge order alone would not reproduce the vertex numbering.
inline void serialize(const Hypergraph& h, std::ostream& out) {
  if (h.order_overridden()) out << "%k=" << h.order() << '\n';
  bool any_singleton = false;
  for (const Edge& e : h.edges()) any_singleton = any_singleton || e.size() == 1;
  if (any_singleton) out << "%allow-singletons\n";

  Vertex next = 0;
  bool first_appearance_dense = true;
  std::vector<bool> seen(h.num_vertices(), false);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) {
      if (seen[v]) continue;
      seen[v] = true;
      if (v != next++) first_appearance_dense = false;
    }
  }
  if (!first_appearance_dense || next != h.num_vertices()) {
    out << "%vertices";
    for (Vertex v = 0; v < h.num_vertices(); ++v) out << ' ' << v;
    out << '\n';
  }
  for (const Edge& e : h.edges()) {
    for (std::size_t t = 0; t < e.size(); ++t) out << (t ? " " : "") << e[t];
    out << '\n';
  }
}

inline std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  serialize(h, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Generators

/// 2-uniform star: centre 0 joined to leaves 1..n-1.
inline Hypergraph generate_star(std::size_t n) {
  if (n < 2) throw InvalidInstance("star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf < n; ++leaf) edges.push_back({0, leaf});
  return Hypergraph(n, std::move(edges));
}

/// 2-uniform path 0-1-...-(n-1).
inline Hypergraph generate_path(std::size_t n) {
  if (n < 2) throw InvalidInstance("path needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Hypergraph(n, std::move(edges));
}

/// All k-subsets of n vertices, in lexicographic order.
inline Hypergraph generate_complete_uniform(std::size_t n, std::size_t k) {
  if (k < 2) throw InvalidInstance("complete hypergraph needs k >= 2");
  if (k > n) throw InvalidInstance("complete hypergraph needs k <= n");
  std::vector<Edge> edges;
  Edge current(k);
  std::iota(current.begin(), current.end(), Vertex{0});
  while (true) {
    edges.push_back(current);
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t t = pos; t < k; ++t) current[t] = current[t - 1] + 1;
  }
  return Hypergraph(n, std::move(edges));
}

/// Generalized power hypergraph: every vertex of the k-uniform base becomes a
/// block of s vertices and every edge receives r - k*s fresh degree-one
/// vertices, so each new edge has exactly r vertices.
///
/// Numbering: the block of base vertex v is [v*s, v*s + s); the filler block
/// of base edge j follows all vertex blocks, in edge order.
inline Hypergraph generate_power(const Hypergraph& base, std::size_t s, std::size_t r) {
  if (!base.is_uniform() || base.rank() != base.order())
    throw InvalidInstance("power hypergraph needs a uniform base with edges");
  if (s < 1) throw InvalidInstance("power hypergraph needs s >= 1");
  const std::size_t k = base.order();
  if (r < k * s)
    throw InvalidInstance("power hypergraph needs r >= k*s (r=" + std::to_string(r) +
                          ", k*s=" + std::to_string(k * s) + ")");
  const std::size_t filler = r - k * s;
  const std::size_t n = s * base.num_vertices() + filler * base.num_edges();
  std::vector<Edge> edges;
  edges.reserve(base.num_edges());
  for (std::size_t j = 0; j < base.num_edges(); ++j) {
    Edge e;
    e.reserve(r);
    for (Vertex v : base.edge(j))
      for (std::size_t t = 0; t < s; ++t) e.push_back(v * s + t);
    const Vertex first_filler = s * base.num_vertices() + j * filler;
    for (std::size_t t = 0; t < filler; ++t) e.push_back(first_filler + t);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace hyperspec
