#include "edgp/cnf.hpp"
#include "edgp/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace edgp;

TEST_CASE("DIMACS parsing") {
  auto f = parse_dimacs("p cnf 1 1\n1 0\n");
  CHECK(f.variable_count() == 1);
  CHECK(f.clause_count() == 1);

  auto g = parse_dimacs("c comment\np cnf 2 2\n1 -2 0\n-1 2 0\n");
  CHECK(g.clause_count() == 2);
  CHECK(g.width() == 2);
  CHECK(g.clause(0)[1].negated);

  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
}

TEST_CASE("clauses may span lines and keep duplicate literals") {
  auto f = parse_dimacs("p cnf 3 1\n1 1\n -3 0\n");
  REQUIRE(f.clause_count() == 1);
  CHECK(f.clause(0).size() == 3);
  CHECK(f.width() == 2);
}

TEST_CASE("DIMACS round trip on canonical text") {
  const std::string text = "p cnf 3 2\n1 -2 3 0\n-1 0\n";
  CHECK(to_dimacs(parse_dimacs(text)) == text);
}

TEST_CASE("evaluate") {
  auto unit = CnfFormula::from_dimacs_lists(1, {{1}});
  CHECK(evaluate(unit, Assignment{true}));
  auto contra = CnfFormula::from_dimacs_lists(1, {{1}, {-1}});
  CHECK_FALSE(evaluate(contra, Assignment{true}));
  CHECK_FALSE(evaluate(contra, Assignment{false}));
  auto wide = CnfFormula::from_dimacs_lists(3, {{1, 2, 3}});
  CHECK(evaluate(wide, Assignment{false, false, true}));
  CHECK_THROWS_AS(evaluate(wide, Assignment{true}), CnfError);
}

TEST_CASE("model enumeration order and guards") {
  auto unit = CnfFormula::from_dimacs_lists(1, {{1}});
  REQUIRE(enumerate_models(unit).models.size() == 1);
  CHECK(enumerate_models(unit).models[0] == Assignment{true});

  CnfFormula empty_clause(1);
  empty_clause.add_clause({});
  CHECK(empty_clause.has_empty_clause());
  CHECK(enumerate_models(empty_clause).models.empty());

  auto either = CnfFormula::from_dimacs_lists(2, {{1, 2}});
  auto models = enumerate_models(either).models;
  REQUIRE(models.size() == 3);
  CHECK(models[0] == Assignment{false, true});
  CHECK(models[1] == Assignment{true, false});
  CHECK(models[2] == Assignment{true, true});

  auto capped = enumerate_models(either, 2);
  CHECK(capped.models.size() == 2);
  CHECK(capped.truncated);

  CHECK_THROWS(enumerate_models(CnfFormula(25)));
}

TEST_CASE("certificate text") {
  Assignment a{true, false, true};
  CHECK(format_certificate(a) == "v1 1\nv2 0\nv3 1\n");
  CHECK(parse_certificate(format_certificate(a)) == a);
  CHECK(a.bits() == "TFT");
}

TEST_CASE("enumeration agrees with evaluate and the recursive oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 1 + rng() % 5;
    CnfFormula f(n);
    const int m = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < m; ++i) {
      Clause c;
      const int width = 1 + static_cast<int>(rng() % 3);
      for (int h = 0; h < width; ++h) c.push_back({1 + static_cast<std::uint32_t>(rng() % n), (rng() & 1) != 0});
      f.add_clause(c);
    }
    auto models = enumerate_models(f).models;
    for (const auto& a : models) CHECK(evaluate(f, a));
    CHECK(models.size() == oracle::model_count(f));
    CHECK(!models.empty() == oracle::satisfiable(f));

    // Repeating a literal changes nothing.
    CnfFormula g(n);
    for (auto c : f.clauses()) {
      c.push_back(c.front());
      g.add_clause(c);
    }
    CHECK(enumerate_models(g).models == models);
  }
}
