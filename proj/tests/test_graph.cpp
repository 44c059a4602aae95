#include "edgp/graph.hpp"
#include "edgp/graph_io.hpp"
#include "edgp/realization.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace edgp;

namespace {

WeightedGraph single_edge(const Rational& w) {
  WeightedGraph g(2);
  g.add_edge(0, 1, w);
  return g;
}

}  // namespace

TEST_CASE("graph construction rejects malformed edges") {
  WeightedGraph g(3);
  CHECK(g.add_edge(0, 1, 2));
  CHECK_FALSE(g.add_edge(1, 0, 2));
  CHECK_THROWS_AS(g.add_edge(0, 1, 3), GraphError);
  CHECK_THROWS_AS(g.add_edge(2, 2, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 2, 0), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 2, -1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 3, 1), GraphError);
  CHECK_THROWS_AS(g.set_anchor(0, std::vector<Rational>{0, 0}), GraphError);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("names are a side map") {
  WeightedGraph g;
  Vertex a = g.add_vertex("A");
  Vertex b = g.add_vertex();
  CHECK(g.name(a) == "A");
  CHECK(g.name(b) == "2");
  CHECK(g.find_by_name("A") == a);
  CHECK_FALSE(g.find_by_name("B"));
}

TEST_CASE("verify_realization on single edges") {
  auto g = single_edge(2);
  CHECK(verify_realization(g, line_realization({0, 2})).ok);
  auto bad = verify_realization(g, line_realization({0, 1}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.edge_violations.size() == 1);
  CHECK(bad.edge_violations[0].edge == 0);
  CHECK(bad.edge_violations[0].residual == 1);
  CHECK_THROWS_AS(verify_realization(g, line_realization({0, 1, 2})), RealizationError);
  CHECK_THROWS_AS(verify_realization(g, Realization(2, 2)), RealizationError);
}

TEST_CASE("verify_realization checks anchors") {
  auto g = single_edge(2);
  g.set_anchor(0, Rational(1));
  CHECK(verify_realization(g, line_realization({1, 3})).ok);
  auto r = verify_realization(g, line_realization({0, 2}));
  CHECK_FALSE(r.ok);
  CHECK(r.anchor_violations == std::vector<Vertex>{0});
}

TEST_CASE("real-mode verification uses relative tolerance") {
  WeightedGraph g(2, 2);
  g.add_edge(0, 1, 5);
  RealRealization x(2, 2);
  x.at(1, 0) = 3;
  x.at(1, 1) = 4;
  CHECK(verify_realization(g, x).ok);
  x.at(1, 1) = Real("4.000001");
  auto r = verify_realization(g, x);
  CHECK_FALSE(r.ok);
  CHECK(r.max_relative_deviation > Real("1e-9"));
  CHECK(verify_realization(g, x, Real("1e-6")).ok);
}

TEST_CASE("congruence on the line") {
  CHECK(congruent(line_realization({0, 1, 3}), line_realization({5, 4, 2})));
  CHECK_FALSE(congruent(line_realization({0, 1, 3}), line_realization({0, 1, 4})));
  CHECK(congruent(line_realization({0, 2}), line_realization({2, 0})));
  CHECK_THROWS_AS(congruent(line_realization({0, 2}), line_realization({0, 2, 4})), RealizationError);
}

TEST_CASE("congruence is an equivalence relation on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<Realization, 3> r;
    for (auto& x : r) x = line_realization({coord(rng), coord(rng), coord(rng)});
    for (auto& x : r) CHECK(congruent(x, x));
    CHECK(congruent(r[0], r[1]) == congruent(r[1], r[0]));
    if (congruent(r[0], r[1]) && congruent(r[1], r[2])) CHECK(congruent(r[0], r[2]));
  }
}

TEST_CASE("verify is invariant under reflection and translation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Realization x = line_realization({coord(rng), coord(rng), coord(rng), coord(rng)});
    WeightedGraph g(4);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v)
        if (x.at(u) != x.at(v) && (u + v + trial) % 2 == 0) g.add_edge(u, v, abs(x.at(u) - x.at(v)));
    const Rational c(coord(rng), 3);
    Realization y = x;
    for (Vertex v = 0; v < 4; ++v) y.at(v) = -x.at(v) + c;
    CHECK(verify_realization(g, x).ok);
    CHECK(verify_realization(g, y).ok);
  }
}

TEST_CASE("scale_to_integer") {
  SUBCASE("fractions") {
    WeightedGraph g(3);
    g.add_edge(0, 1, Rational(1, 2));
    g.add_edge(1, 2, Rational(3, 4));
    auto s = scale_to_integer(g);
    CHECK(s.graph.edge(0).weight == 2);
    CHECK(s.graph.edge(1).weight == 3);
    CHECK(s.scale == Rational(1, 4));
  }
  SUBCASE("identity") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 2);
    auto s = scale_to_integer(g);
    CHECK(same_edges(s.graph, g));
    CHECK(s.scale == 1);
  }
  SUBCASE("gcd") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 4);
    g.set_anchor(0, Rational(6));
    auto s = scale_to_integer(g);
    CHECK(s.graph.edge(0).weight == 1);
    CHECK(s.graph.edge(1).weight == 2);
    CHECK(s.scale == 2);
    CHECK((*s.graph.anchor(0))[0] == 3);
  }
  SUBCASE("realizations carry over") {
    WeightedGraph g(3);
    g.add_edge(0, 1, Rational(1, 3));
    g.add_edge(1, 2, Rational(1, 2));
    auto s = scale_to_integer(g);
    Realization x = line_realization({0, 0, 0});
    x.at(1) = Rational(1, 3);
    x.at(2) = Rational(-1, 6);
    CHECK(verify_realization(g, x).ok);
    Realization y = x;
    for (Vertex v = 0; v < 3; ++v) y.at(v) = x.at(v) / s.scale;
    CHECK(verify_realization(s.graph, y).ok);
  }
}

TEST_CASE("simple cycle enumeration") {
  SUBCASE("triangle") {
    std::vector<Rational> w{1, 1, 2};
    auto c = enumerate_simple_cycles(cycle_graph(w), 100);
    CHECK(c.size() == 1);
    CHECK(c.lengths[0] == 4);
    CHECK_FALSE(c.truncated);
  }
  SUBCASE("tree") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(1, 3, 1);
    CHECK(enumerate_simple_cycles(g, 100).size() == 0);
  }
  SUBCASE("K4 has seven cycles") {
    WeightedGraph g(4);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v, 1);
    auto c = enumerate_simple_cycles(g, 100);
    CHECK(c.size() == 7);
    auto capped = enumerate_simple_cycles(g, 3);
    CHECK(capped.size() == 3);
    CHECK(capped.truncated);
  }
  SUBCASE("K5 has 37 cycles") {
    WeightedGraph g(5);
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v) g.add_edge(u, v, 1);
    CHECK(enumerate_simple_cycles(g, 1000).size() == 37);
  }
}

TEST_CASE("graph text format round trip") {
  const std::string text =
      "# demo\n"
      "n 3\n"
      "e 1 2 1/2\n"
      "e 2 3 6/4\n"
      "a 1 0\n"
      "name 1 A\n";
  std::istringstream in(text);
  WeightedGraph g = read_graph(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge(1).weight == Rational(3, 2));
  CHECK(g.name(0) == "A");
  std::istringstream again(to_text(g));
  WeightedGraph h = read_graph(again);
  CHECK(same_edges(g, h));
  CHECK(h.anchors() == g.anchors());
  CHECK(to_text(h) == to_text(g));
}

TEST_CASE("graph text format errors") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_graph(in);
  };
  CHECK_THROWS(parse("e 1 2 1\n"));
  CHECK_THROWS(parse("n 2\nn 2\n"));
  CHECK_THROWS(parse("n 2\ne 1 3 1\n"));
  CHECK_THROWS(parse("n 2\ne 1 2 x\n"));
  CHECK_THROWS(parse("n 2\nbogus\n"));
}

TEST_CASE("realization text format") {
  Realization x = line_realization({0, 3});
  x.at(1) = Rational(7, 2);
  std::istringstream in(to_text(x));
  CHECK(read_realization(in) == x);
  std::istringstream unreduced("dim 1\nx 1 2/4\nx 2 -6/3\n");
  Realization y = read_realization(unreduced);
  CHECK(y.at(0) == Rational(1, 2));
  CHECK(y.at(1) == -2);
  std::istringstream decimals("dim 1\nx 1 0\nx 2 1.1\n");
  RealRealization z = read_real_realization(decimals);
  CHECK(abs(z.at(1) - Real("1.1")) < Real("1e-30"));
}
