#include "edgp/oracles.hpp"
#include "edgp/realizer.hpp"
#include "edgp/sat_reductions.hpp"

#include <doctest.h>

#include <random>

using namespace edgp;

TEST_CASE("partition reduction") {
  SUBCASE("(1,2,3)") {
    auto r = reduce_partition({{1, 2, 3}});
    CHECK(r.graph.vertex_count() == 4);
    CHECK(r.graph.edge_count() == 3);
    Realization x = r.witness.forward({true, true, false});
    CHECK(x == line_realization({0, 1, 3, 0}));
    CHECK(verify_realization(r.graph, x).ok);
    CHECK(r.witness.backward(x) == PartitionSplit{true, true, false});
    CHECK(bp_solve(r.graph).realizable());
  }
  SUBCASE("(8,9) is a NO instance") {
    auto r = reduce_partition({{8, 9}});
    CHECK_FALSE(bp_solve(r.graph).realizable());
    CHECK(bp_enumerate(r.graph).realizations.empty());
  }
  SUBCASE("(1,1)") {
    auto r = reduce_partition({{1, 1}});
    auto s = bp_solve(r.graph);
    REQUIRE(s.realizable());
    CHECK(s.realizations[0] == line_realization({0, 1, 0}));
  }
  CHECK_THROWS(reduce_partition({{5}}));
  CHECK_THROWS(reduce_partition({{5, 0}}));
}

TEST_CASE("partition reduction matches subset sum for n <= 8, values <= 12") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long long> values(2 + rng() % 7);
    for (auto& v : values) v = 1 + static_cast<long long>(rng() % 12);
    auto r = reduce_partition({values});
    const auto solved = bp_solve(r.graph);
    CHECK(solved.realizable() == oracle::partition_solvable(values));
    if (solved.realizable()) {
      auto split = r.witness.backward(solved.realizations[0]);
      CHECK(r.witness.forward(split) == solved.realizations[0]);
    }
  }
}

TEST_CASE("compiled graph shape") {
  auto f = CnfFormula::from_dimacs_lists(3, {{1, 2, 3}});
  auto c = compile_3sat(f);
  CHECK(c.graph.vertex_count() == 16);
  CHECK(c.graph.edge_count() == 23);
  CHECK(*c.graph.anchor(c.anchor_a) == std::vector<Rational>{0});
  CHECK(*c.graph.anchor(c.anchor_b) == std::vector<Rational>{2});
  for (const auto& e : c.graph.edges()) CHECK((e.weight >= 1 && e.weight <= 4 && is_integer(e.weight)));
  CHECK(c.graph.name(c.clauses[0].c[5]) == "c_1_6");
  CHECK(c.graph.is_connected());
}

TEST_CASE("forward witness for (T,T,T) and round trip") {
  auto f = CnfFormula::from_dimacs_lists(3, {{1, 2, 3}});
  auto c = compile_3sat(f);
  Realization x = c.witness.forward(Assignment{true, true, true});
  CHECK(verify_realization(c.graph, x).ok);
  const std::array<long, 8> expected{6, 4, 6, 6, 8, 7, 2, 5};
  for (std::size_t k = 0; k < 8; ++k) CHECK(x.at(c.clauses[0].c[k]) == expected[k]);
  CHECK(c.witness.backward(x) == Assignment{true, true, true});
  CHECK_THROWS_AS(c.witness.forward(Assignment{false, false, false}), CnfError);
}

TEST_CASE("each satisfying literal triple has exactly one clause placement") {
  for (int mask = 0; mask < 8; ++mask) {
    std::array<int, 3> lits{(mask & 4) ? 1 : -1, (mask & 2) ? 1 : -1, (mask & 1) ? 1 : -1};
    std::array<int, 8> row{};
    const bool has = clause_gadget::placement(lits, row);
    CHECK(has == (mask != 0));

    // Anchored gadget with the literal vertices pinned.
    WeightedGraph g(clause_gadget::kLocalVertices);
    g.add_edge(clause_gadget::kA, clause_gadget::kB, 2);
    for (std::size_t h = 0; h < 3; ++h) g.add_edge(clause_gadget::kA, clause_gadget::kL1 + h, 1);
    for (const auto& e : clause_gadget::kEdges) g.add_edge(e.a, e.b, e.weight);
    g.set_anchor(clause_gadget::kA, Rational(0));
    g.set_anchor(clause_gadget::kB, Rational(2));
    for (std::size_t h = 0; h < 3; ++h) g.set_anchor(clause_gadget::kL1 + h, Rational(lits[h]));
    auto all = bp_enumerate(g);
    CHECK(all.realizations.size() == (mask != 0 ? 1u : 0u));
    if (has && !all.realizations.empty())
      for (std::size_t k = 1; k <= 8; ++k) CHECK(all.realizations[0].at(clause_gadget::c(k)) == row[k - 1]);
  }
}

TEST_CASE("reachable sets of c6") {
  auto none = clause_gadget_reachable_sets({-1, -1, -1});
  CHECK(none.paths[0] == std::set<long>{-7, -5, 1, 3});
  CHECK(none.paths[1] == std::set<long>{-5, -3, -1, 1, 3, 5, 7, 9});
  CHECK(none.paths[2] == std::set<long>{-7, -5, -3, -1});
  CHECK(none.paths[3] == std::set<long>{-7, -3, 1, 5});
  CHECK(none.intersection.empty());

  // c6 sits at 7 in the verified (1,1,1) placement.
  CHECK(clause_gadget_reachable_sets({1, 1, 1}).intersection == std::set<long>{7});
  CHECK(clause_gadget_reachable_sets({-1, -1, 1}).intersection.contains(-5));
  CHECK_THROWS(clause_gadget_reachable_sets({0, 1, 1}));
}

TEST_CASE("unsatisfiable formula compiles to an unrealizable graph") {
  auto f = CnfFormula::from_dimacs_lists(1, {{1, 1, 1}, {-1, -1, -1}});
  CHECK_FALSE(bp_solve(compile_3sat(f).graph).realizable());
}

TEST_CASE("compile rejects wide and empty clauses") {
  CHECK_THROWS_AS(compile_3sat(CnfFormula::from_dimacs_lists(4, {{1, 2, 3, 4}})), CnfError);
  CnfFormula f(1);
  f.add_clause({});
  CHECK_THROWS_AS(compile_3sat(f), CnfError);
}

TEST_CASE("witnesses on random formulas") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t n = 1 + rng() % 4;
    CnfFormula f(n);
    const int m = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < m; ++i) {
      Clause c;
      for (int h = 0, w = 1 + static_cast<int>(rng() % 3); h < w; ++h)
        c.push_back({1 + static_cast<std::uint32_t>(rng() % n), (rng() & 1) != 0});
      f.add_clause(c);
    }
    auto compiled = compile_3sat(f);
    auto models = enumerate_models(f).models;
    for (const auto& a : models) {
      Realization x = compiled.witness.forward(a);
      CHECK(verify_realization(compiled.graph, x).ok);
      CHECK(compiled.witness.backward(x) == a);
    }
    CHECK(bp_enumerate(compiled.graph).realizations.size() == models.size());
  }
}
