#include "edgp/oracles.hpp"

#include <cstdlib>
#include <functional>
#include <queue>
#include <set>

namespace edgp::oracle {

std::vector<Realization> sign_vector_classes(const WeightedGraph& g) {
  if (g.dimension() != 1) throw std::invalid_argument("sign-vector oracle works on the line only");
  const std::size_t n = g.vertex_count();

  // BFS forest: parent edge per vertex, roots in id order.
  std::vector<int> comp(n, -1);
  std::vector<std::optional<std::pair<Vertex, Rational>>> parent(n);
  std::vector<Vertex> order, roots;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(roots.size());
    roots.push_back(s);
    comp[s] = c;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      order.push_back(u);
      for (const auto& inc : g.neighbors(u))
        if (comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = c;
          parent[inc.neighbor] = std::pair{u, g.edge(inc.edge).weight};
          q.push(inc.neighbor);
        }
    }
  }
  std::vector<Vertex> tree_vertices;
  for (Vertex v : order)
    if (parent[v]) tree_vertices.push_back(v);
  if (tree_vertices.size() > 24) throw std::invalid_argument("sign-vector oracle limited to 24 tree edges");

  std::vector<std::optional<Vertex>> anchor_of(roots.size());
  for (const auto& [v, pos] : g.anchors())
    if (!anchor_of[comp[v]]) anchor_of[comp[v]] = v;

  std::set<std::vector<Rational>> seen;
  std::vector<Realization> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tree_vertices.size()); ++mask) {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < tree_vertices.size(); ++i) {
      const Vertex v = tree_vertices[i];
      const auto& [p, w] = *parent[v];
      x[v] = ((mask >> i) & 1) ? Rational(x[p] - w) : Rational(x[p] + w);
    }
    // Shift anchored components onto their first anchor.
    for (std::size_t c = 0; c < roots.size(); ++c) {
      if (!anchor_of[c]) continue;
      const Rational shift = (*g.anchor(*anchor_of[c]))[0] - x[*anchor_of[c]];
      for (Vertex v = 0; v < n; ++v)
        if (comp[v] == static_cast<int>(c)) x[v] += shift;
    }
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && abs(x[e.u] - x[e.v]) == e.weight;
    for (const auto& [v, pos] : g.anchors()) ok = ok && x[v] == pos[0];
    if (!ok) continue;

    // Unanchored components: pick the lexicographically smaller of x and -x.
    std::vector<Rational> key = x;
    for (std::size_t c = 0; c < roots.size(); ++c) {
      if (anchor_of[c]) continue;
      std::vector<Rational> plus, minus;
      for (Vertex v = 0; v < n; ++v)
        if (comp[v] == static_cast<int>(c)) {
          plus.push_back(x[v]);
          minus.push_back(-x[v]);
        }
      const bool flip = minus < plus;
      for (Vertex v = 0; v < n; ++v)
        if (comp[v] == static_cast<int>(c) && flip) key[v] = -x[v];
    }
    for (auto& q : key) q.canonicalize();
    if (seen.insert(key).second) out.emplace_back(key);
  }
  return out;
}

bool partition_solvable(const std::vector<long long>& values) {
  long long total = 0;
  for (long long v : values) total += v;
  if (total % 2 != 0) return false;
  std::set<long long> sums{0};
  for (long long v : values) {
    std::set<long long> next = sums;
    for (long long s : sums) next.insert(s + v);
    sums = std::move(next);
  }
  return sums.contains(total / 2);
}

long long cycle_min_gap(const std::vector<long>& weights) {
  long long best = -1;
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long sum) {
    if (i == weights.size()) {
      const long long gap = std::llabs(sum);
      if (best < 0 || gap < best) best = gap;
      return;
    }
    rec(i + 1, sum + weights[i]);
    rec(i + 1, sum - weights[i]);
  };
  rec(0, 0);
  return best;
}

namespace {

// -1 falsified, 0 undecided, 1 satisfied under a partial assignment.
int clause_state(const Clause& c, const std::vector<int>& value) {
  bool open = false;
  for (const auto& lit : c) {
    const int v = value[lit.var];
    if (v == 0) open = true;
    else if ((v > 0) != lit.negated) return 1;
  }
  return open ? 0 : -1;
}

std::size_t count_from(const CnfFormula& f, std::vector<int>& value, std::uint32_t next, bool stop_at_first) {
  for (const auto& c : f.clauses())
    if (clause_state(c, value) < 0) return 0;
  if (next > f.variable_count()) return 1;
  std::size_t total = 0;
  for (int v : {1, -1}) {
    value[next] = v;
    total += count_from(f, value, next + 1, stop_at_first);
    value[next] = 0;
    if (stop_at_first && total > 0) break;
  }
  return total;
}

}  // namespace

bool satisfiable(const CnfFormula& f) {
  std::vector<int> value(f.variable_count() + 1, 0);
  return count_from(f, value, 1, true) > 0;
}

std::size_t model_count(const CnfFormula& f) {
  std::vector<int> value(f.variable_count() + 1, 0);
  return count_from(f, value, 1, false);
}

}  // namespace edgp::oracle
