#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "hyperspec/random.hpp"
#include "hyperspec/tensor.hpp"
#include "oracles.hpp"

using namespace hyperspec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Small random instances, sometimes with the order raised above the rank.
Hypergraph small_instance(std::mt19937_64& rng, std::size_t max_n, std::size_t max_k) {
  const Hypergraph base = random_connected_hypergraph(rng, {3, max_n, 2, max_k});
  const std::size_t k = std::uniform_int_distribution<std::size_t>(base.rank(), max_k)(rng);
  return Hypergraph(base.num_vertices(), base.edges(), HypergraphOptions{k, false});
}

std::vector<double> positive_vector(std::mt19937_64& rng, std::size_t n) {
  return random_positive_vector(rng, n);
}

void require_close(const std::vector<double>& a, const std::vector<double>& b, double rel) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE_THAT(a[i], WithinRel(b[i], rel));
}

}  // namespace

TEST_CASE("apply examples", "[tensor]") {
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<double> y = hyperspec::apply(generate_complete_uniform(2, 2), std::vector<double>{s, s});
  CHECK_THAT(y[0], WithinRel(s, 1e-15));
  CHECK_THAT(y[1], WithinRel(s, 1e-15));

  const Hypergraph mixed(3, {{0, 1}, {0, 1, 2}});
  const std::vector<double> x{0.4, 0.5, 0.6};
  const double y0 = (2 * 0.4 * 0.5 + 0.5 * 0.5) / 3.0 + 0.5 * 0.6;
  CHECK_THAT(hyperspec::apply(mixed, x)[0], WithinRel(y0, 1e-14));

  const Hypergraph isolated(3, {{0, 1}});
  CHECK(hyperspec::apply(isolated, std::vector<double>{1, 1, 1})[2] == 0.0);
  CHECK_THROWS_AS(hyperspec::apply(mixed, std::vector<double>{1, 1}), InvalidInstance);
}

TEST_CASE("operator weights", "[tensor]") {
  const Hypergraph mixed(3, {{0, 1}, {0, 1, 2}});
  AdjacencyOperator op(mixed);
  CHECK(op.weight(0) == 1.0 / 3.0);
  CHECK(op.weight(1) == 0.5);
}

TEST_CASE("apply on regular instances at the uniform vector", "[tensor][property]") {
  const std::vector<Hypergraph> regular = {
      generate_complete_uniform(2, 2), generate_complete_uniform(4, 2),
      generate_complete_uniform(4, 3), generate_complete_uniform(5, 3),
      generate_complete_uniform(6, 4), generate_power(generate_complete_uniform(4, 2), 2, 4)};
  for (const Hypergraph& h : regular) {
    const std::size_t n = h.num_vertices();
    const double k = static_cast<double>(h.order());
    const double r = static_cast<double>(degrees(h).max);
    const std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / k));
    const double expected = r * std::pow(static_cast<double>(n), -(k - 1.0) / k);
    for (double yi : hyperspec::apply(h, x)) REQUIRE_THAT(yi, WithinRel(expected, 1e-13));
  }
}

TEST_CASE("quadratic form examples", "[tensor]") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK_THAT(quadratic_form(generate_complete_uniform(2, 2), std::vector<double>{s, s}),
             WithinRel(1.0, 1e-15));

  // uniform case: k * sum over edges of the product of its entries
  const Hypergraph h = generate_complete_uniform(5, 3);
  const std::vector<double> x{0.1, 0.2, 0.3, 0.4, 0.5};
  double expected = 0.0;
  for (const Edge& e : h.edges()) expected += 3 * x[e[0]] * x[e[1]] * x[e[2]];
  CHECK_THAT(quadratic_form(h, x), WithinRel(expected, 1e-14));
}

TEST_CASE("quadratic form equals x . Ax", "[tensor][property]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h = random_connected_hypergraph(rng);
    const std::vector<double> x = positive_vector(rng, h.num_vertices());
    const std::vector<double> y = hyperspec::apply(h, x);
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
    REQUIRE_THAT(quadratic_form(h, x), WithinRel(dot, 1e-10));
  }
}

TEST_CASE("operator matches the dense definition", "[tensor][oracle]") {
  std::mt19937_64 rng(41);
  for (int inst = 0; inst < 40; ++inst) {
    const Hypergraph h = small_instance(rng, 6, 4);
    const oracle::Dense reference = oracle::dense_from_definition(h);
    const DenseTensor dense = materialize_dense(h);
    REQUIRE(dense.entries == reference.a);
    for (int trial = 0; trial < 50; ++trial) {
      const std::vector<double> x = positive_vector(rng, h.num_vertices());
      const std::vector<double> y = hyperspec::apply(h, x);
      require_close(y, oracle::contract(reference, x), 1e-12);
      require_close(y, contract(dense, x), 1e-12);
    }
  }
}

TEST_CASE("dense tensor is symmetric", "[tensor][property]") {
  std::mt19937_64 rng(43);
  for (int inst = 0; inst < 20; ++inst) {
    const Hypergraph h = small_instance(rng, 5, 4);
    const DenseTensor t = materialize_dense(h);
    std::vector<std::size_t> idx(t.k);
    for (std::size_t flat = 0; flat < t.entries.size(); ++flat) {
      std::size_t rem = flat;
      for (std::size_t p = t.k; p-- > 0;) {
        idx[p] = rem % t.n;
        rem /= t.n;
      }
      std::vector<std::size_t> perm = idx;
      std::sort(perm.begin(), perm.end());
      do {
        REQUIRE(t.at(perm) == t.entries[flat]);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("apply is homogeneous and monotone", "[tensor][property]") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h = random_connected_hypergraph(rng);
    const std::vector<double> x = positive_vector(rng, h.num_vertices());
    const double c = std::uniform_real_distribution<double>(0.1, 4.0)(rng);
    std::vector<double> cx = x, bigger = x;
    for (double& v : cx) v *= c;
    for (double& v : bigger) v += std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    const double km1 = static_cast<double>(h.order() - 1);
    const std::vector<double> y = hyperspec::apply(h, x);
    const std::vector<double> ycx = hyperspec::apply(h, cx);
    const std::vector<double> ybig = hyperspec::apply(h, bigger);
    for (std::size_t i = 0; i < y.size(); ++i) {
      REQUIRE_THAT(ycx[i], WithinRel(std::pow(c, km1) * y[i], 1e-12));
      REQUIRE(ybig[i] >= y[i]);
    }
  }
}

TEST_CASE("materialize_dense examples", "[tensor]") {
  const DenseTensor k2 = materialize_dense(generate_complete_uniform(2, 2));
  CHECK(k2.entries == std::vector<double>{0, 1, 1, 0});

  const Hypergraph single(2, {{0, 1}}, HypergraphOptions{3, false});
  const DenseTensor t = materialize_dense(single);
  std::size_t nonzero = 0;
  for (double a : t.entries) {
    if (a != 0.0) {
      ++nonzero;
      CHECK(a == 1.0 / 3.0);
    }
  }
  CHECK(nonzero == 6);
  CHECK(t.at(std::vector<std::size_t>{0, 0, 0}) == 0.0);
  CHECK(t.at(std::vector<std::size_t>{1, 0, 1}) == 1.0 / 3.0);

  const Hypergraph empty(3, {});
  const DenseTensor z = materialize_dense(empty);
  CHECK(z.entries == std::vector<double>(9, 0.0));

  const Hypergraph wide(20, {{0, 1, 2, 3, 4, 5}});
  CHECK_THROWS_AS(materialize_dense(wide), CapExceeded);
}

TEST_CASE("write_nonzeros", "[tensor]") {
  std::ostringstream out;
  write_nonzeros(materialize_dense(generate_star(3)), out);
  CHECK(out.str() == "0 1 1\n0 2 1\n1 0 1\n2 0 1\n");

  std::ostringstream third;
  write_nonzeros(materialize_dense(Hypergraph(2, {{0, 1}}, HypergraphOptions{3, false})), third);
  CHECK(third.str() ==
        "0 0 1 0.33333333333333331\n0 1 0 0.33333333333333331\n0 1 1 0.33333333333333331\n"
        "1 0 0 0.33333333333333331\n1 0 1 0.33333333333333331\n1 1 0 0.33333333333333331\n");
}
