#include "edgp/realizer.hpp"

#include <limits>
#include <set>

namespace edgp {

namespace {

void require_line(const WeightedGraph& g) {
  if (g.dimension() != 1) throw std::invalid_argument("branch-and-prune works on the line only (K = 1)");
}

bool anchors_consistent(const WeightedGraph& g) {
  for (const auto& e : g.edges()) {
    const auto* a = g.anchor(e.u);
    const auto* b = g.anchor(e.v);
    if (a && b && abs((*a)[0] - (*b)[0]) != e.weight) return false;
  }
  return true;
}

}  // namespace

SearchOrder search_order(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unplaced = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> position(n, unplaced);
  SearchOrder order;

  // Frontier keyed by (unanchored?, id).
  auto key = [&](Vertex v) { return std::pair<int, Vertex>{g.is_anchored(v) ? 0 : 1, v}; };

  while (order.steps.size() < n) {
    std::optional<Vertex> root;
    for (const auto& [v, pos] : g.anchors())
      if (position[v] == unplaced) {
        root = v;
        break;
      }
    if (!root)
      for (Vertex v = 0; v < n; ++v)
        if (position[v] == unplaced) {
          root = v;
          break;
        }
    const bool anchored_component = g.is_anchored(*root);
    const std::size_t component_start = order.steps.size();

    std::set<std::pair<int, Vertex>> frontier{key(*root)};
    while (!frontier.empty()) {
      Vertex v = frontier.begin()->second;
      frontier.erase(frontier.begin());
      if (position[v] != unplaced) continue;

      SearchOrder::Step step{v, std::nullopt, Rational(0), {}, false};
      for (const auto& inc : g.neighbors(v)) {
        std::size_t p = position[inc.neighbor];
        if (p == unplaced) continue;
        const Rational& w = g.edge(inc.edge).weight;
        if (!step.parent || p < *step.parent) {
          if (step.parent) step.back_edges.emplace_back(*step.parent, step.parent_weight);
          step.parent = p;
          step.parent_weight = w;
        } else {
          step.back_edges.emplace_back(p, w);
        }
      }
      step.plus_only = !anchored_component && order.steps.size() == component_start + 1;
      position[v] = order.steps.size();
      order.steps.push_back(std::move(step));
      for (const auto& inc : g.neighbors(v))
        if (position[inc.neighbor] == unplaced) frontier.insert(key(inc.neighbor));
    }
  }
  return order;
}

std::uint64_t bp_search(const WeightedGraph& g, const std::function<bool(const Realization&)>& visit) {
  require_line(g);
  if (!anchors_consistent(g)) return 0;

  const SearchOrder order = search_order(g);
  const std::size_t n = order.steps.size();
  if (n == 0) {
    visit(Realization(0, 1));
    return 0;
  }

  std::vector<Rational> value(n);   // by position
  std::vector<int> branch(n, 0);    // next candidate index per position
  Realization current(n, 1);
  std::uint64_t nodes = 0;

  auto candidate_count = [&](std::size_t level) {
    const auto& step = order.steps[level];
    if (g.is_anchored(step.vertex) || !step.parent || step.plus_only) return 1;
    return 2;
  };
  auto candidate = [&](std::size_t level, int which) -> Rational {
    const auto& step = order.steps[level];
    if (const auto* a = g.anchor(step.vertex)) return (*a)[0];
    if (!step.parent) return Rational(0);
    return which == 0 ? Rational(value[*step.parent] + step.parent_weight)
                      : Rational(value[*step.parent] - step.parent_weight);
  };

  std::size_t level = 0;
  while (true) {
    if (level == n) {
      for (std::size_t i = 0; i < n; ++i) current.at(order.steps[i].vertex) = value[i];
      if (!visit(current)) return nodes;
      --level;
      continue;
    }
    if (branch[level] >= candidate_count(level)) {
      branch[level] = 0;
      if (level == 0) break;
      --level;
      continue;
    }
    Rational x = candidate(level, branch[level]++);
    ++nodes;
    const auto& step = order.steps[level];
    bool ok = !step.parent || abs(x - value[*step.parent]) == step.parent_weight;
    for (std::size_t b = 0; ok && b < step.back_edges.size(); ++b)
      ok = abs(x - value[step.back_edges[b].first]) == step.back_edges[b].second;
    if (!ok) continue;
    value[level] = std::move(x);
    ++level;
  }
  return nodes;
}

SearchReport bp_solve(const WeightedGraph& g) {
  SearchReport report;
  report.nodes_explored = bp_search(g, [&](const Realization& x) {
    report.realizations.push_back(x);
    return false;
  });
  report.status = report.realizations.empty() ? SearchStatus::Unrealizable : SearchStatus::Realizable;
  return report;
}

SearchReport bp_enumerate(const WeightedGraph& g, std::size_t cap) {
  SearchReport report;
  report.nodes_explored = bp_search(g, [&](const Realization& x) {
    if (report.realizations.size() == cap) {
      report.truncated = true;
      return false;
    }
    report.realizations.push_back(x);
    return true;
  });
  report.status = report.realizations.empty() ? SearchStatus::Unrealizable : SearchStatus::Realizable;
  return report;
}

AmbiguityResult decide_ambiguous(const WeightedGraph& g, const Realization& x) {
  if (!verify_realization(g, x)) throw RealizationError("the given realization does not realize the graph");
  AmbiguityResult result;
  result.nodes_explored = bp_search(g, [&](const Realization& y) {
    if (congruent(x, y)) return true;
    result.ambiguous = true;
    result.witness = y;
    return false;
  });
  return result;
}

Realization rational_certificate(const WeightedGraph& g, const Realization& x) {
  require_line(g);
  if (!verify_realization(g, x)) throw RealizationError("the given realization does not realize the graph");
  Realization out = x;
  if (g.anchors().empty() && out.vertex_count() > 0) {
    const Rational shift = x.at(0);
    for (Vertex v = 0; v < out.vertex_count(); ++v) out.at(v) -= shift;
  }
  for (Vertex v = 0; v < out.vertex_count(); ++v) out.at(v).canonicalize();
  return out;
}

}  // namespace edgp
