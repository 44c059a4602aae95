#include "edgp/approx.hpp"
#include "edgp/oracles.hpp"
#include "edgp/realizer.hpp"
#include "edgp/sat_reductions.hpp"

#include <doctest.h>

#include <random>

using namespace edgp;

namespace {

WeightedGraph single_edge(long w) {
  WeightedGraph g(2);
  g.add_edge(0, 1, w);
  return g;
}

RealRealization line(std::initializer_list<const char*> xs) {
  std::vector<Real> v;
  for (const char* s : xs) v.emplace_back(s);
  return RealRealization(std::move(v));
}

}  // namespace

TEST_CASE("verify_approx") {
  auto g = single_edge(8);
  auto y = line({"0", "9"});
  auto r = verify_approx(g, y, Real(1) / 8);
  CHECK(r.ok);
  CHECK(r.epsilon_achieved == Real(1) / 8);
  CHECK_FALSE(verify_approx(g, y, Real(1) / 9).ok);
  auto exact = verify_approx(g, line({"0", "8"}), Real(0));
  CHECK(exact.ok);
  CHECK(exact.epsilon_achieved == 0);
  CHECK_THROWS(verify_approx(g, y, Real(1)));
  CHECK_THROWS(verify_approx(g, line({"0"}), Real("0.1")));
}

TEST_CASE("verify_approx is monotone in eps") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = single_edge(1 + static_cast<long>(rng() % 9));
    RealRealization y(2, 1);
    y.at(1) = to_real(g.edge(0).weight) + Real(jitter(rng));
    const Real eps = Real(static_cast<double>(rng() % 100)) / 101;
    const Real bigger = eps + (1 - eps) * Real(static_cast<double>(rng() % 100)) / 101;
    if (verify_approx(g, y, eps).ok) CHECK(verify_approx(g, y, bigger).ok);
  }
}

TEST_CASE("cycle decision examples") {
  const std::vector<long> nine{8, 9};
  auto yes = cycle_approx_decide(nine, Rational(1, 8));
  CHECK(yes.verdict == ApproxVerdict::Yes);
  CHECK(yes.analysis.min_closure_gap == 1);
  CHECK(yes.analysis.length == 17);
  REQUIRE(yes.positions.size() == 2);
  CHECK(yes.positions[1] == 9);
  CHECK(yes.lengths == std::vector<Rational>{9, 9});

  CHECK(cycle_approx_decide(nine, Rational(1, 34)).verdict == ApproxVerdict::No);

  const std::vector<long> tri{1, 2, 3};
  for (Rational d : {Rational(0), Rational(1, 100), Rational(1, 2)}) {
    auto r = cycle_approx_decide(tri, d);
    CHECK(r.verdict == ApproxVerdict::Yes);
    CHECK(r.lengths == std::vector<Rational>{1, 2, 3});
  }
  auto a = analyze_cycle(tri);
  CHECK(a.length == 6);
  CHECK(a.delta_threshold == Rational(1, 3));

  std::vector<long> too_long(25, 1);
  CHECK_THROWS(analyze_cycle(too_long));
}

TEST_CASE("stretch witnesses stay in the band and close the cycle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> w(2 + rng() % 7);
    for (auto& x : w) x = 1 + static_cast<long>(rng() % 10);
    const Rational delta(static_cast<long>(rng() % 20), 40);
    auto d = cycle_approx_decide(w, delta);
    CHECK((d.verdict == ApproxVerdict::Yes) ==
          (Rational(static_cast<long>(oracle::cycle_min_gap(w))) <= delta * Rational(d.analysis.length)));
    if (d.verdict != ApproxVerdict::Yes) continue;
    Rational sum = 0;
    for (std::size_t v = 0; v < w.size(); ++v) {
      CHECK(d.lengths[v] >= (1 - delta) * w[v]);
      CHECK(d.lengths[v] <= (1 + delta) * w[v]);
      sum += d.signs[v] * d.lengths[v];
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("classification reports the gap region") {
  const std::vector<long> nine{8, 9};
  CHECK(cycle_approx_classify(nine, Rational(1, 8), Rational(1, 8)).verdict == ApproxVerdict::Yes);
  CHECK(cycle_approx_classify(nine, Rational(1, 20), Rational(1, 8)).verdict == ApproxVerdict::Indeterminate);
  CHECK(cycle_approx_classify(nine, Rational(1, 40), Rational(1, 40)).verdict == ApproxVerdict::No);
  CHECK_THROWS(cycle_approx_classify(nine, Rational(1, 4), Rational(1, 8)));
}

TEST_CASE("rounding cases") {
  auto g = single_edge(1);
  g.set_anchor(0, Rational(0));
  auto over = round_approximate(g, line({"0", "1.1"}));
  CHECK(over.verified);
  CHECK(over.x == line_realization({0, 1}));
  CHECK(over.steps[1].rule == 1);

  auto under = round_approximate(g, line({"0", "0.95"}));
  CHECK(under.verified);
  CHECK(under.steps[1].rule == 2);

  auto left = round_approximate(g, line({"0", "-1.1"}));
  CHECK(left.verified);
  CHECK(left.x == line_realization({0, -1}));
  CHECK(left.steps[1].rule == 4);

  auto left_under = round_approximate(g, line({"0", "-0.9"}));
  CHECK(left_under.x == line_realization({0, -1}));
  CHECK(left_under.steps[1].rule == 5);

  auto exact = round_approximate(g, line({"0", "1"}));
  CHECK(exact.steps[1].rule == 3);
  CHECK(round_approximate(g, line({"0", "-1"})).steps[1].rule == 6);

  auto two = single_edge(2);
  two.set_anchor(0, Rational(0));
  auto hit = round_approximate(two, line({"0", "1"}));
  CHECK(hit.integer_hits == std::vector<Vertex>{1});
  CHECK_FALSE(hit.verified);

  WeightedGraph frac(2);
  frac.add_edge(0, 1, Rational(1, 2));
  CHECK_THROWS_AS(round_approximate(frac, line({"0", "0.5"})), GraphError);
}

TEST_CASE("rounding is the identity on exact integer realizations") {
  for (auto values : {std::vector<long long>{1, 2, 3}, std::vector<long long>{3, 1, 1, 2, 3}}) {
    auto r = reduce_partition({values});
    auto all = bp_enumerate(r.graph);
    for (const auto& x : all.realizations) {
      auto rounded = round_approximate(r.graph, to_real(x));
      CHECK(rounded.verified);
      CHECK(rounded.x == x);
      for (const auto& s : rounded.steps) CHECK((s.rule == 0 || s.rule == 3 || s.rule == 6));
    }
  }
}

TEST_CASE("gadget cycle analysis") {
  auto tri = analyze_gadget_cycles(cycle_graph(std::vector<Rational>{1, 2, 3}));
  CHECK(tri.max_length == 6);
  CHECK(tri.delta_threshold == Rational(1, 3));

  auto literal = analyze_gadget_cycles(literal_gadget(3));
  CHECK(literal.max_length == 4);
  CHECK(literal.cycle_count == 3);
  CHECK(literal.cover.size() == 3);
  CHECK(literal.cover_complete);

  auto single = compile_3sat(CnfFormula::from_dimacs_lists(3, {{1, 2, 3}}));
  auto report = analyze_gadget_cycles(single.graph);
  CHECK(report.cycle_count == 36);
  CHECK(report.max_length == 18);
  CHECK(report.cover_complete);
}
