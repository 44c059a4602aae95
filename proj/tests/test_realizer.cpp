#include "edgp/oracles.hpp"
#include "edgp/realizer.hpp"
#include "edgp/sat_reductions.hpp"

#include <doctest.h>

#include <random>

using namespace edgp;

namespace {

WeightedGraph path(std::initializer_list<long> weights) {
  WeightedGraph g(weights.size() + 1);
  Vertex v = 0;
  for (long w : weights) {
    g.add_edge(v, v + 1, w);
    ++v;
  }
  return g;
}

WeightedGraph triangle(long a, long b, long c) {
  WeightedGraph g(3);
  g.add_edge(0, 1, a);
  g.add_edge(1, 2, b);
  g.add_edge(0, 2, c);
  return g;
}

}  // namespace

TEST_CASE("bp_solve examples") {
  auto edge = path({3});
  edge.set_anchor(0, Rational(0));
  auto s = bp_solve(edge);
  REQUIRE(s.realizable());
  CHECK(s.realizations[0] == line_realization({0, 3}));

  auto collinear = bp_solve(triangle(1, 1, 2));
  REQUIRE(collinear.realizable());
  CHECK(congruent(collinear.realizations[0], line_realization({0, 1, 2})));

  CHECK_FALSE(bp_solve(triangle(1, 1, 1)).realizable());
}

TEST_CASE("bp_enumerate examples") {
  auto classes = bp_enumerate(path({1, 1}));
  REQUIRE(classes.realizations.size() == 2);
  CHECK(classes.realizations[0] == line_realization({0, 1, 2}));
  CHECK(classes.realizations[1] == line_realization({0, 1, 0}));

  auto f = CnfFormula::from_dimacs_lists(3, {{1, 2, 3}});
  CHECK(bp_enumerate(compile_3sat(f).graph).realizations.size() == 7);

  auto capped = bp_enumerate(path({1, 1, 1}), 2);
  CHECK(capped.realizations.size() == 2);
  CHECK(capped.truncated);
}

TEST_CASE("anchor pre-pass rejects inconsistent anchors") {
  auto g = path({2});
  g.set_anchor(0, Rational(0));
  g.set_anchor(1, Rational(3));
  auto s = bp_solve(g);
  CHECK_FALSE(s.realizable());
  CHECK(s.nodes_explored == 0);
}

TEST_CASE("search order puts anchors first") {
  WeightedGraph g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.set_anchor(2, Rational(5));
  auto order = search_order(g);
  CHECK(order.steps[0].vertex == 2);
  CHECK(order.steps[1].vertex == 1);
  CHECK(order.steps[2].vertex == 0);
  CHECK_FALSE(order.steps[1].plus_only);
}

TEST_CASE("disconnected graphs are canonical per component") {
  WeightedGraph g(4);
  g.add_edge(0, 1, 1);
  g.add_edge(2, 3, 2);
  auto all = bp_enumerate(g);
  CHECK(all.realizations.size() == 1);
  CHECK(all.realizations[0] == line_realization({0, 1, 0, 2}));
}

TEST_CASE("decide_ambiguous") {
  auto p = path({1, 1});
  auto yes = decide_ambiguous(p, line_realization({0, 1, 2}));
  CHECK(yes.ambiguous);
  REQUIRE(yes.witness);
  CHECK(*yes.witness == line_realization({0, 1, 0}));

  auto no = decide_ambiguous(path({1}), line_realization({0, 1}));
  CHECK_FALSE(no.ambiguous);

  CHECK_THROWS_AS(decide_ambiguous(path({1}), line_realization({0, 2})), RealizationError);

  auto unique = CnfFormula::from_dimacs_lists(2, {{1}, {-2}});
  auto c = compile_3sat(unique);
  CHECK_FALSE(decide_ambiguous(c.graph, c.witness.forward(Assignment{true, false})).ambiguous);
}

TEST_CASE("rational certificate") {
  auto g = path({3});
  CHECK(rational_certificate(g, line_realization({0, 3})) == line_realization({0, 3}));
  Realization x(2, 1);
  x.at(0) = Rational(1, 2);
  x.at(1) = Rational(7, 2);
  CHECK(rational_certificate(g, x) == line_realization({0, 3}));
}

TEST_CASE("random graphs: representatives verify, are incongruent and match the oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    // Plant a realization so that a fair share of instances are YES.
    std::vector<long> planted(n);
    for (auto& v : planted) v = static_cast<long>(rng() % 7);
    WeightedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() % 3 != 0) continue;
        long w = std::labs(planted[u] - planted[v]);
        if (w == 0 || rng() % 5 == 0) w = 1 + static_cast<long>(rng() % 6);
        g.add_edge(u, v, w);
      }
    auto report = bp_enumerate(g);
    for (const auto& x : report.realizations) CHECK(verify_realization(g, x).ok);
    for (std::size_t i = 0; i < report.realizations.size(); ++i)
      for (std::size_t j = i + 1; j < report.realizations.size(); ++j)
        CHECK_FALSE(congruent(report.realizations[i], report.realizations[j]));
    CHECK(report.realizations.size() == oracle::sign_vector_classes(g).size());
    CHECK(report.nodes_explored <= (std::uint64_t{1} << (n - 1)) * n);
  }
}
