#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/random.hpp"
#include "oracles.hpp"

using namespace hyperspec;

TEST_CASE("parse: two-edge path", "[hypergraph][parse]") {
  const Hypergraph h = parse_hypergraph("a b\nb c");
  CHECK(h.num_vertices() == 3);
  CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(h.order() == 2);
  CHECK(h.label(0) == "a");
  CHECK(h.label(2) == "c");
}

TEST_CASE("parse: order header", "[hypergraph][parse]") {
  const Hypergraph h = parse_hypergraph("%k=3\na b\na b c");
  CHECK(h.rank() == 3);
  CHECK(h.order() == 3);
  CHECK_FALSE(h.order_overridden());
  CHECK(h.edge(0).size() == 2);
  CHECK(h.edge(1).size() == 3);
  CHECK_FALSE(h.is_uniform());

  const Hypergraph wide = parse_hypergraph("%k=4\na b\nb c");
  CHECK(wide.rank() == 2);
  CHECK(wide.order() == 4);
  CHECK(wide.order_overridden());
}

TEST_CASE("parse: rejects malformed input", "[hypergraph][parse]") {
  CHECK_THROWS_AS(parse_hypergraph("a b\na b"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("a b\nb a"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("a b\nc"), ParseError);  // singleton
  CHECK_THROWS_AS(parse_hypergraph("a a b"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("%k=1\na b"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("%k=2\na b c"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("%frobnicate\na b"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("# only a comment\n\n"), ParseError);

  try {
    parse_hypergraph("x y\ny z\nx y\n");
    FAIL("expected a duplicate-edge error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("parse: strict mode and declarations", "[hypergraph][parse]") {
  ParseOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(parse_hypergraph("%vertices a b\na c", strict), ParseError);
  const Hypergraph h = parse_hypergraph("%vertices a b c d\na c", strict);
  CHECK(h.num_vertices() == 4);
  CHECK(h.degree(3) == 0);
  CHECK(h.edge(0) == Edge{0, 2});
}

TEST_CASE("parse: comments, blank lines and singletons", "[hypergraph][parse]") {
  const Hypergraph h = parse_hypergraph("# header\n\n a  b   # trailing\n\n%allow-singletons\nc\n");
  CHECK(h.num_edges() == 2);
  CHECK(h.edge(1) == Edge{2});
  CHECK(h.singletons_allowed());
}

TEST_CASE("model rejects invalid edge sets", "[hypergraph]") {
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), InvalidInstance);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InvalidInstance);
  CHECK_THROWS_AS(Hypergraph(3, {{}}), InvalidInstance);
  CHECK_THROWS_AS(Hypergraph(3, {{1}}), InvalidInstance);
  CHECK_NOTHROW(Hypergraph(3, {{1}}, HypergraphOptions{std::nullopt, true}));
  CHECK_THROWS_AS(Hypergraph(0, {}), InvalidInstance);
}

TEST_CASE("degrees", "[hypergraph]") {
  const DegreeProfile star = degrees(generate_star(4));
  CHECK(star.degree == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(star.max == 3);
  CHECK(star.min == 1);
  CHECK(star.average == 1.5);

  const DegreeProfile k4 = degrees(generate_complete_uniform(4, 2));
  CHECK(k4.degree == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(k4.regular());

  const DegreeProfile mixed = degrees(Hypergraph(3, {{0, 1}, {0, 1, 2}}));
  CHECK(mixed.degree == std::vector<std::size_t>{2, 2, 1});
}

TEST_CASE("connectivity", "[hypergraph]") {
  CHECK(connectivity(Hypergraph(3, {{0, 1}, {1, 2}})).connected);
  const auto two = connectivity(Hypergraph(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(two.connected);
  CHECK(two.num_components == 2);
  CHECK(two.component == std::vector<std::size_t>{0, 0, 1, 1});
  const auto isolated = connectivity(Hypergraph(3, {{0, 1}}));
  CHECK_FALSE(isolated.connected);
  CHECK(isolated.component[2] == 1);
}

TEST_CASE("connectivity agrees with transitive closure", "[hypergraph][property]") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> nd(1, 8), md(0, 6), sd(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = nd(rng);
    std::set<Edge> edges;
    const std::size_t m = md(rng);
    for (std::size_t j = 0; j < m; ++j) {
      std::set<Vertex> e;
      const std::size_t size = std::min(sd(rng), n);
      while (e.size() < size) e.insert(std::uniform_int_distribution<Vertex>(0, n - 1)(rng));
      edges.insert(Edge(e.begin(), e.end()));
    }
    const Hypergraph h(n, std::vector<Edge>(edges.begin(), edges.end()),
                       HypergraphOptions{std::nullopt, true});
    const auto reach = oracle::reachability(h);
    const auto conn = connectivity(h);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        REQUIRE((conn.component[a] == conn.component[b]) == reach[a][b]);
  }
}

TEST_CASE("generate_star", "[hypergraph][generate]") {
  CHECK(generate_star(4).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(generate_star(2).edges() == std::vector<Edge>{{0, 1}});
  const Hypergraph s3 = generate_star(3);
  CHECK(s3.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(degrees(s3).degree == std::vector<std::size_t>{2, 1, 1});
  CHECK_THROWS_AS(generate_star(1), InvalidInstance);
}

TEST_CASE("generate_complete_uniform", "[hypergraph][generate]") {
  const Hypergraph k4 = generate_complete_uniform(4, 2);
  CHECK(k4.num_edges() == 6);
  CHECK(degrees(k4).regular());
  CHECK(degrees(k4).max == 3);
  const Hypergraph k43 = generate_complete_uniform(4, 3);
  CHECK(k43.num_edges() == 4);
  CHECK(degrees(k43).degree == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(generate_complete_uniform(3, 3).num_edges() == 1);
  CHECK_THROWS_AS(generate_complete_uniform(3, 4), InvalidInstance);
}

TEST_CASE("generate_power: examples", "[hypergraph][generate]") {
  const Hypergraph s3 = generate_star(3);
  const Hypergraph p = generate_power(s3, 1, 3);
  CHECK(p.num_edges() == 2);
  CHECK(p.num_vertices() == 5);  // centre, two leaves, one filler per edge
  CHECK(p.is_uniform());
  CHECK(p.order() == 3);
  CHECK(p.edge(0) == Edge{0, 1, 3});
  CHECK(p.edge(1) == Edge{0, 2, 4});

  const Hypergraph k4p = generate_power(generate_complete_uniform(4, 2), 2, 4);
  CHECK(k4p.num_edges() == 6);
  CHECK(k4p.num_vertices() == 8);
  CHECK(k4p.is_uniform());

  CHECK(generate_power(s3, 1, 2) == s3);

  CHECK_THROWS_AS(generate_power(s3, 2, 3), InvalidInstance);
  CHECK_THROWS_AS(generate_power(Hypergraph(3, {{0, 1}, {0, 1, 2}}), 1, 4), InvalidInstance);
}

TEST_CASE("generate_power: counts and degrees", "[hypergraph][generate][property]") {
  const std::vector<Hypergraph> bases = {generate_star(3), generate_star(5),
                                         generate_complete_uniform(4, 2),
                                         generate_complete_uniform(5, 3), generate_path(4)};
  for (const Hypergraph& base : bases) {
    const std::size_t k = base.order();
    const auto dbase = degrees(base);
    for (std::size_t s = 1; s <= 3; ++s)
      for (std::size_t r = k * s; r <= k * s + 3; ++r) {
        const Hypergraph p = generate_power(base, s, r);
        const std::size_t filler = r - k * s;
        REQUIRE(p.num_vertices() == s * base.num_vertices() + filler * base.num_edges());
        REQUIRE(p.is_uniform());
        REQUIRE(p.order() == r);
        const auto dp = degrees(p);
        for (Vertex v = 0; v < base.num_vertices(); ++v)
          for (std::size_t t = 0; t < s; ++t) REQUIRE(dp.degree[v * s + t] == dbase.degree[v]);
        for (Vertex f = s * base.num_vertices(); f < p.num_vertices(); ++f)
          REQUIRE(dp.degree[f] == 1);
      }
  }
}

TEST_CASE("serialize then parse is the identity", "[hypergraph][property]") {
  std::mt19937_64 rng(99);
  std::vector<Hypergraph> cases = {
      generate_star(6),
      Hypergraph(4, {{2, 3}, {0, 1}}),                          // needs %vertices
      Hypergraph(5, {{0, 1}}),                                  // isolated vertices
      Hypergraph(3, {{0, 1}, {1, 2}}, HypergraphOptions{4, false}),  // explicit k
      Hypergraph(3, {{0, 1}, {2}}, HypergraphOptions{std::nullopt, true}),
  };
  for (int i = 0; i < 50; ++i) cases.push_back(random_connected_hypergraph(rng));
  for (const Hypergraph& h : cases) {
    const Hypergraph back = parse_hypergraph(serialize(h));
    REQUIRE(back == h);
    REQUIRE(back.order_overridden() == h.order_overridden());
  }
}

TEST_CASE("random instances are connected and within bounds", "[hypergraph][random]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Hypergraph h = random_connected_hypergraph(rng);
    REQUIRE(connectivity(h).connected);
    REQUIRE(h.num_vertices() >= 3);
    REQUIRE(h.num_vertices() <= 10);
    REQUIRE(h.order() <= 4);
    for (const Edge& e : h.edges()) REQUIRE(e.size() >= 2);
  }
}
