#include "edgp/approx.hpp"

#include "edgp/realizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace edgp {

ApproxReport verify_approx(const WeightedGraph& g, const RealRealization& y, const Real& eps) {
  if (eps < 0 || eps >= 1) throw std::invalid_argument("eps must lie in [0, 1)");
  if (y.dimension() != g.dimension() || y.vertex_count() != g.vertex_count())
    throw RealizationError("approximate realization does not cover the graph");
  ApproxReport report;
  for (const auto& e : g.edges()) {
    Real dev = abs(sqrt(y.squared_distance(e.u, e.v)) / to_real(e.weight) - 1);
    report.epsilon_achieved = std::max(report.epsilon_achieved, dev);
  }
  report.ok = report.epsilon_achieved <= eps;
  return report;
}

CycleAnalysis analyze_cycle(std::span<const Integer> weights) {
  if (weights.empty()) throw std::invalid_argument("cycle needs at least one edge");
  if (weights.size() > kMaxCycleEdges)
    throw std::invalid_argument("cycle has " + std::to_string(weights.size()) + " edges; the exhaustive guard is " +
                                std::to_string(kMaxCycleEdges));
  for (const auto& w : weights)
    if (sgn(w) <= 0) throw std::invalid_argument("cycle weights must be positive integers");

  CycleAnalysis a;
  a.weights.assign(weights.begin(), weights.end());
  a.length = std::accumulate(weights.begin(), weights.end(), Integer(0));
  const std::size_t n = weights.size();
  // sigma_1 fixed to +1; bit v-1 of mask set means sigma_v = -1.
  std::optional<std::uint64_t> best_mask;
  const bool small = a.length.fits_slong_p();
  std::vector<long> w64;
  if (small)
    for (const auto& w : weights) w64.push_back(w.get_si());
  long best64 = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    if (small) {
      long sum = w64[0];
      for (std::size_t v = 1; v < n; ++v) sum += ((mask >> (v - 1)) & 1) ? -w64[v] : w64[v];
      if (!best_mask || std::labs(sum) < best64) {
        best_mask = mask;
        best64 = std::labs(sum);
      }
      continue;
    }
    Integer sum = weights[0];
    for (std::size_t v = 1; v < n; ++v) sum += ((mask >> (v - 1)) & 1) ? Integer(-weights[v]) : weights[v];
    Integer gap = abs(sum);
    if (!best_mask || gap < a.min_closure_gap) {
      best_mask = mask;
      a.min_closure_gap = gap;
    }
  }
  if (small) a.min_closure_gap = best64;
  a.best_signs.assign(n, 1);
  for (std::size_t v = 1; v < n; ++v) a.best_signs[v] = ((*best_mask >> (v - 1)) & 1) ? -1 : 1;
  a.delta_threshold = Rational(2, 1) / Rational(a.length);
  a.least_tolerance = Rational(a.min_closure_gap) / Rational(a.length);
  a.delta_threshold.canonicalize();
  a.least_tolerance.canonicalize();
  return a;
}

CycleAnalysis analyze_cycle(std::span<const long> weights) {
  std::vector<Integer> w;
  for (long x : weights) w.emplace_back(x);
  return analyze_cycle(std::span<const Integer>(w));
}

namespace {

void build_witness(CycleDecision& d, const Rational& delta) {
  const auto& a = d.analysis;
  const std::size_t n = a.weights.size();
  d.signs = a.best_signs;
  Rational residual = 0;
  for (std::size_t v = 0; v < n; ++v) residual += d.signs[v] * Rational(a.weights[v]);
  Rational remaining = -residual;  // what sum sigma_v (l_v - d_v) must still supply
  d.lengths.clear();
  for (std::size_t v = 0; v < n; ++v) {
    const Rational cap = delta * Rational(a.weights[v]);
    Rational take = abs(remaining) < cap ? Rational(abs(remaining)) : cap;
    if (sgn(remaining) < 0) take = -take;
    // sigma_v * change = take
    Rational change = d.signs[v] * take;
    d.lengths.push_back(Rational(a.weights[v]) + change);
    remaining -= take;
  }
  d.positions = {Rational(0)};
  for (std::size_t v = 0; v + 1 < n; ++v) d.positions.push_back(d.positions.back() + d.signs[v] * d.lengths[v]);
  for (auto& q : d.lengths) q.canonicalize();
  for (auto& q : d.positions) q.canonicalize();
}

}  // namespace

CycleDecision cycle_approx_decide(std::span<const long> weights, const Rational& delta) {
  if (sgn(delta) < 0) throw std::invalid_argument("delta must be non-negative");
  CycleDecision d;
  d.analysis = analyze_cycle(weights);
  if (d.analysis.least_tolerance <= delta) {
    d.verdict = ApproxVerdict::Yes;
    build_witness(d, delta);
  }
  return d;
}

CycleDecision cycle_approx_classify(std::span<const long> weights, const Rational& eps, const Rational& delta) {
  if (sgn(eps) < 0 || eps > delta) throw std::invalid_argument("need 0 <= eps <= delta");
  CycleDecision d = cycle_approx_decide(weights, delta);
  if (d.verdict == ApproxVerdict::Yes && d.analysis.least_tolerance > eps) d.verdict = ApproxVerdict::Indeterminate;
  return d;
}

const char* to_string(ApproxVerdict v) {
  switch (v) {
    case ApproxVerdict::Yes: return "YES";
    case ApproxVerdict::No: return "NO";
    case ApproxVerdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

Real integer_guard() { return Real("1e-12"); }

RoundingResult round_approximate(const WeightedGraph& g, const RealRealization& y) {
  if (g.dimension() != 1 || y.dimension() != 1) throw std::invalid_argument("rounding works on the line only");
  if (y.vertex_count() != g.vertex_count()) throw RealizationError("approximate realization does not cover the graph");
  for (const auto& e : g.edges())
    if (!is_integer(e.weight)) throw GraphError("rounding needs integer weights");

  const Real guard = integer_guard();
  auto near_integer = [&](const Real& r) { return abs(r - round(r)) <= guard; };

  RoundingResult out;
  out.x = Realization(g.vertex_count(), 1);
  const SearchOrder order = search_order(g);
  for (const auto& step : order.steps) {
    const Vertex v = step.vertex;
    const Real yv = y.at(v);
    if (!step.parent) {
      if (const auto* a = g.anchor(v)) out.x.at(v) = (*a)[0];
      else out.x.at(v) = to_rational(round(yv));
      out.steps.push_back({v, std::nullopt, 0});
      continue;
    }
    const Vertex p = order.steps[*step.parent].vertex;
    const Real yp = y.at(p);
    const Real d = to_real(step.parent_weight);
    const Real span = abs(yv - yp);
    const bool rightward = yv >= yp;
    if (yv == yp) out.degenerate.push_back(v);

    int rule;
    Rational value;
    if (abs(span - d) <= guard) {
      rule = rightward ? 3 : 6;
      value = to_rational(yv);
    } else {
      const bool over = span > d;
      const bool take_floor = rightward == over;  // rules 1 and 5 floor, 2 and 4 ceil
      rule = rightward ? (over ? 1 : 2) : (over ? 4 : 5);
      value = to_rational(take_floor ? floor(yv) : ceil(yv));
      if (near_integer(yv)) out.integer_hits.push_back(v);
    }
    value.canonicalize();
    out.x.at(v) = value;
    out.steps.push_back({v, p, rule});
  }
  out.verified = verify_realization(g, out.x).ok;
  return out;
}

GadgetCycleReport analyze_gadget_cycles(const WeightedGraph& g, std::size_t cap) {
  GadgetCycleReport r;
  r.listing = enumerate_simple_cycles(g, cap);
  r.cycle_count = r.listing.size();
  r.truncated = r.listing.truncated;
  if (r.listing.size() == 0) return r;
  r.max_length = *r.listing.max_length();
  r.delta_threshold = Rational(2) / r.max_length;
  r.delta_threshold.canonicalize();

  std::map<Rational, std::size_t> histogram;
  for (const auto& len : r.listing.lengths) ++histogram[len];
  r.length_histogram.assign(histogram.begin(), histogram.end());

  // Edge sets of each cycle.
  std::vector<std::set<std::size_t>> edge_sets;
  for (const auto& cyc : r.listing.cycles) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < cyc.size(); ++i) s.insert(*g.find_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    edge_sets.push_back(std::move(s));
  }
  std::set<std::size_t> covered;
  std::vector<bool> used(r.listing.size(), false);
  for (std::size_t i = 0; i < r.listing.size(); ++i)
    if (r.listing.lengths[i] == r.max_length) {
      used[i] = true;
      r.cover.push_back(i);
      covered.insert(edge_sets[i].begin(), edge_sets[i].end());
    }
  while (true) {
    std::size_t best = r.listing.size(), best_gain = 0;
    for (std::size_t i = 0; i < r.listing.size(); ++i) {
      if (used[i]) continue;
      std::size_t gain = 0;
      for (auto e : edge_sets[i]) gain += !covered.contains(e);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == r.listing.size()) break;
    used[best] = true;
    r.cover.push_back(best);
    covered.insert(edge_sets[best].begin(), edge_sets[best].end());
  }
  // Bridges lie on no cycle, so "complete" means every cycle edge is covered.
  std::set<std::size_t> cycle_edges;
  for (const auto& s : edge_sets) cycle_edges.insert(s.begin(), s.end());
  r.cover_complete = covered == cycle_edges;
  return r;
}

}  // namespace edgp
