#include "edgp/gadgets.hpp"
#include "edgp/realizer.hpp"
#include "edgp/sat_reductions.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using namespace edgp;

namespace {

WeightedGraph single_edge(long w) {
  WeightedGraph g(2);
  g.add_edge(0, 1, w);
  return g;
}

}  // namespace

TEST_CASE("T gadget sizes and weights") {
  const std::array<std::array<std::size_t, 3>, 4> sizes{{{3, 4, 5}, {4, 5, 7}, {5, 6, 9}, {8, 9, 15}}};
  for (const auto& [h, vertices, edges] : sizes) {
    auto t = t_gadget(static_cast<int>(h));
    CHECK(t.graph.vertex_count() == vertices);
    CHECK(t.graph.edge_count() == edges);
    for (const auto& e : t.graph.edges()) CHECK((e.weight == 1 || e.weight == 2));
  }
  CHECK_THROWS(t_gadget(6));
}

TEST_CASE("T gadgets have one realization with terminal separation h") {
  for (int h : {3, 4, 5, 8}) {
    auto t = t_gadget(h);
    auto all = bp_enumerate(t.graph);
    REQUIRE(all.realizations.size() == 1);
    const auto& x = all.realizations[0];
    CHECK(abs(x.at(t.terminals[1]) - x.at(t.terminals[0])) == h);
    for (Vertex v = 0; v < t.graph.vertex_count(); ++v) CHECK(x.at(v) == static_cast<long>(v));
  }
}

TEST_CASE("expand_weights") {
  auto three = expand_weights(single_edge(3));
  CHECK(three.graph.vertex_count() == 4);
  CHECK(three.graph.edge_count() == 5);
  auto all = bp_enumerate(three.graph);
  REQUIRE(all.realizations.size() == 1);
  CHECK(abs(all.realizations[0].at(0) - all.realizations[0].at(1)) == 3);

  auto one = expand_weights(single_edge(1));
  CHECK(same_edges(one.graph, single_edge(1)));
  CHECK_THROWS_AS(expand_weights(single_edge(6)), GraphError);

  auto f = CnfFormula::from_dimacs_lists(3, {{1, -2, 3}});
  auto compiled = compile_3sat(f);
  auto expanded = expand_weights(compiled.graph);
  for (const auto& e : expanded.graph.edges()) CHECK((e.weight == 1 || e.weight == 2));
  CHECK(bp_enumerate(expanded.graph).realizations.size() == bp_enumerate(compiled.graph).realizations.size());

  auto unsat = compile_3sat(CnfFormula::from_dimacs_lists(1, {{1}, {-1}}));
  CHECK_FALSE(bp_solve(expand_weights(unsat.graph).graph).realizable());
}

TEST_CASE("R1 and R2 templates") {
  auto r1 = r1_gadget();
  CHECK(r1.graph.vertex_count() == 4);
  CHECK(r1.graph.edge_count() == 6);
  auto r2 = r2_gadget();
  CHECK(r2.graph.vertex_count() == 6);
  CHECK(r2.graph.edge_count() == 13);
  CHECK(same_edges(build_rbar(2, 1).graph, r1.graph));
  CHECK(same_edges(build_rbar(2, 2).graph, r2.graph));
}

TEST_CASE("planar lift") {
  auto lifted = lift_saxe(single_edge(1));
  CHECK(lifted.graph.dimension() == 2);
  CHECK(lifted.graph.vertex_count() == 4);
  RealRealization corners(4, 2);
  // f1, f2, f3, f4
  const std::array<std::array<int, 2>, 4> xy{{{0, 0}, {0, 3}, {4, 0}, {4, 3}}};
  // Template order is f1, f3 (terminals, ids 0 and 1), then f2, f4.
  const std::array<Vertex, 4> id{0, 2, 1, 3};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 2; ++k) corners.at(id[i], k) = xy[i][k];
  CHECK(verify_realization(lifted.graph, corners).ok);

  auto two = lift_saxe(single_edge(2));
  CHECK(two.graph.vertex_count() == 6);
  auto x = realize_lifted(two, line_realization({0, 2}));
  CHECK(verify_realization(two.graph, x).ok);
  CHECK(abs(x.at(1, 0) - 8) < Real("1e-30"));

  WeightedGraph p(3);
  p.add_edge(0, 1, 1);
  p.add_edge(1, 2, 1);
  auto chain = lift_saxe(p);
  CHECK(chain.graph.vertex_count() == 7);
  CHECK(verify_realization(chain.graph, realize_lifted(chain, line_realization({0, 1, 0}))).ok);
  CHECK_THROWS_AS(lift_saxe(single_edge(3)), GraphError);
}

TEST_CASE("clique lift") {
  auto tri = lift_clique(single_edge(1), 2);
  CHECK(tri.graph.vertex_count() == 3);
  CHECK(tri.graph.edge_count() == 3);
  for (const auto& e : tri.graph.edges()) CHECK(e.weight == 1);
  auto k4 = lift_clique(single_edge(1), 3);
  CHECK(k4.graph.vertex_count() == 4);
  CHECK(k4.graph.edge_count() == 6);
  CHECK(minimal_embedding_dimension(k4.graph) == 3u);
  CHECK_THROWS_AS(lift_clique(single_edge(2), 3), GraphError);

  WeightedGraph p(3);
  p.add_edge(1, 2, 1);
  p.add_edge(0, 1, 1);
  auto one = lift_clique(p, 3);
  REQUIRE(one.gadgets.size() == 1);
  CHECK(one.gadgets[0][0] == 0);
  CHECK(one.gadgets[0][1] == 1);
  CHECK(lift_clique(p, 3, true).gadgets.size() == 2);
  auto x = realize_lifted(one, line_realization({0, 1, 2}));
  CHECK(verify_realization(one.graph, x).ok);
}

TEST_CASE("Rbar templates") {
  for (std::size_t k = 2; k <= 5; ++k) {
    auto one = build_rbar(k, 1);
    CHECK(one.graph.vertex_count() == 2 * k);
    CHECK(one.graph.edge_count() == k * (k - 1) + k + (k * k - k));
    auto two = build_rbar(k, 2);
    CHECK(two.graph.vertex_count() == 3 * k);
    CHECK(two.graph.edge_count() == 3 * k * (k - 1) / 2 + 2 * k + 2 * (k * k - k) + k);
    CHECK(verify_realization(one.graph, realize_gadget(one)).ok);
    CHECK(verify_realization(two.graph, realize_gadget(two)).ok);
    CHECK(minimal_embedding_dimension(one.graph) == k);
    std::vector<Vertex> half;
    for (Vertex v = 0; v < k; ++v) half.push_back(v);
    CHECK(minimal_embedding_dimension(induced_subgraph(one.graph, half)) == k - 1);
  }
  CHECK(build_rbar(3, 1).graph.edge_count() == 15);
  CHECK(build_rbar(3, 2).graph.find_edge(0, 6));
  CHECK(build_rbar(3, 2).graph.edge(*build_rbar(3, 2).graph.find_edge(2, 8)).weight == 8);
  CHECK_THROWS(build_rbar(1, 1));
}

TEST_CASE("Rbar weight-4 segments are parallel") {
  const std::size_t k = 4;
  auto t = build_rbar(k, 1);
  auto x = realize_gadget(t);
  for (Vertex i = 0; i < k; ++i)
    for (std::size_t a = 0; a < k; ++a) CHECK(x.at(i + k, a) - x.at(i, a) == (a == k - 1 ? Real(4) : Real(0)));
}

TEST_CASE("clique realizations") {
  auto c2 = clique_gadget(2);
  auto x = realize_gadget(c2);
  CHECK(verify_realization(c2.graph, x).ok);
  CHECK(abs(x.at(2, 1) - sqrt(Real(3)) / 2) < Real("1e-30"));
  for (std::size_t k = 1; k <= 6; ++k) {
    auto c = clique_gadget(k);
    CHECK(verify_realization(c.graph, realize_gadget(c)).ok);
    CHECK(minimal_embedding_dimension(c.graph) == k);
  }
}

TEST_CASE("minimal embedding dimension") {
  using Matrix = std::vector<std::vector<Rational>>;
  CHECK(minimal_embedding_dimension(Matrix{{0, 1, 9}, {1, 0, 4}, {9, 4, 0}}) == 1u);
  CHECK_FALSE(minimal_embedding_dimension(Matrix{{0, 1, 9}, {1, 0, 1}, {9, 1, 0}}));
  CHECK(minimal_embedding_dimension(Matrix{{0}}) == 0u);
  WeightedGraph path(3);
  path.add_edge(0, 1, 1);
  path.add_edge(1, 2, 1);
  CHECK_THROWS_AS(minimal_embedding_dimension(path), GraphError);
}

TEST_CASE("clique flexibility") {
  WeightedGraph p(3);
  p.add_edge(0, 1, 1);
  p.add_edge(1, 2, 1);
  const Real half_pi = boost::math::constants::half_pi<Real>();
  auto demo = clique_flexibility_demo(p, line_realization({0, 1, 2}), 3, half_pi);
  CHECK(demo.first_verifies);
  CHECK(demo.second_verifies);
  CHECK_FALSE(demo.congruent);

  auto turned = rotate(demo.first, 1, 2, half_pi);
  CHECK(congruent(demo.first, turned));
  CHECK(verify_realization(demo.lifted.graph, turned).ok);

  CHECK_THROWS(clique_flexibility_demo(p, line_realization({0, 1, 2}), 2, half_pi));
}

TEST_CASE("gadget kind names") {
  for (auto kind : {GadgetKind::T3, GadgetKind::T8, GadgetKind::R2, GadgetKind::Clique, GadgetKind::RbarK1})
    CHECK(parse_gadget_kind(to_string(kind)) == kind);
  CHECK_THROWS(parse_gadget_kind("T7"));
}
