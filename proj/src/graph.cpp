#include "edgp/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace edgp {

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::size_t dimension)
    : dimension_(dimension), adjacency_(vertex_count), names_(vertex_count) {
  if (dimension == 0) throw GraphError("dimension must be positive");
}

void WeightedGraph::set_dimension(std::size_t k) {
  if (k == 0) throw GraphError("dimension must be positive");
  for (const auto& [v, pos] : anchors_)
    if (pos.size() != k) throw GraphError("anchor of vertex " + name(v) + " has the wrong dimension");
  dimension_ = k;
}

Vertex WeightedGraph::add_vertex(std::string name) {
  adjacency_.emplace_back();
  names_.push_back(std::move(name));
  return static_cast<Vertex>(adjacency_.size() - 1);
}

void WeightedGraph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size())
    throw GraphError("vertex id " + std::to_string(v + 1) + " out of range 1.." +
                     std::to_string(adjacency_.size()));
}

bool WeightedGraph::add_edge(Vertex u, Vertex v, const Rational& weight) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop on vertex " + name(u));
  if (sgn(weight) <= 0)
    throw GraphError("edge {" + name(u) + "," + name(v) + "} has non-positive weight " +
                     format_rational(weight));
  if (auto existing = find_edge(u, v)) {
    if (edges_[*existing].weight != weight)
      throw GraphError("edge {" + name(u) + "," + name(v) + "} already present with weight " +
                       format_rational(edges_[*existing].weight));
    return false;
  }
  Rational w(weight);
  w.canonicalize();
  edges_.push_back(Edge{u, v, w});
  adjacency_[u].push_back({v, edges_.size() - 1});
  adjacency_[v].push_back({u, edges_.size() - 1});
  return true;
}

std::optional<std::size_t> WeightedGraph::find_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  Vertex other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  for (const auto& inc : shorter)
    if (inc.neighbor == other) return inc.edge;
  return std::nullopt;
}

void WeightedGraph::set_anchor(Vertex v, std::vector<Rational> position) {
  check_vertex(v);
  if (position.size() != dimension_)
    throw GraphError("anchor of vertex " + name(v) + " has " + std::to_string(position.size()) +
                     " coordinates, expected " + std::to_string(dimension_));
  for (auto& c : position) c.canonicalize();
  anchors_[v] = std::move(position);
}

const std::vector<Rational>* WeightedGraph::anchor(Vertex v) const {
  auto it = anchors_.find(v);
  return it == anchors_.end() ? nullptr : &it->second;
}

void WeightedGraph::set_name(Vertex v, std::string name) {
  check_vertex(v);
  names_[v] = std::move(name);
}

std::string WeightedGraph::name(Vertex v) const {
  if (v < names_.size() && !names_[v].empty()) return names_[v];
  return std::to_string(v + 1);
}

std::optional<Vertex> WeightedGraph::find_by_name(const std::string& name) const {
  for (Vertex v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

bool WeightedGraph::is_complete() const {
  const std::size_t n = vertex_count();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<std::size_t> WeightedGraph::components() const {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(vertex_count(), unset);
  std::size_t next = 0;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (comp[s] != unset) continue;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (const auto& inc : adjacency_[u])
        if (comp[inc.neighbor] == unset) {
          comp[inc.neighbor] = next;
          q.push(inc.neighbor);
        }
    }
    ++next;
  }
  return comp;
}

bool WeightedGraph::is_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool same_edges(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (const auto& e : a.edges()) {
    auto other = b.find_edge(e.u, e.v);
    if (!other || b.edge(*other).weight != e.weight) return false;
  }
  return true;
}

ScaledGraph scale_to_integer(const WeightedGraph& g) {
  Integer lcm_den = 1;
  for (const auto& e : g.edges()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.weight.get_den().get_mpz_t());
  Integer gcd_num = 0;
  for (const auto& e : g.edges()) {
    Integer scaled_num = e.weight.get_num() * (lcm_den / e.weight.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled_num.get_mpz_t());
  }
  if (gcd_num == 0) gcd_num = 1;  // edgeless
  const Rational factor(lcm_den, gcd_num);  // new = old * factor

  WeightedGraph out(g.vertex_count(), g.dimension());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.has_name(v)) out.set_name(v, g.name(v));
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v, e.weight * factor);
  for (const auto& [v, pos] : g.anchors()) {
    std::vector<Rational> scaled;
    for (const auto& c : pos) scaled.push_back(c * factor);
    out.set_anchor(v, std::move(scaled));
  }
  Rational scale = 1 / factor;
  scale.canonicalize();
  return {std::move(out), scale};
}

std::optional<Rational> CycleListing::max_length() const {
  if (lengths.empty()) return std::nullopt;
  return *std::max_element(lengths.begin(), lengths.end());
}

CycleListing enumerate_simple_cycles(const WeightedGraph& g, std::size_t max_count) {
  CycleListing out;
  const std::size_t n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<Rational> prefix;  // prefix[i] = length of path[0..i]

  // Cycles are rooted at their lowest vertex; the second vertex is smaller
  // than the last one so each cycle is emitted in exactly one direction.
  std::function<bool(Vertex)> extend = [&](Vertex root) -> bool {
    Vertex tip = path.back();
    for (const auto& inc : g.neighbors(tip)) {
      Vertex w = inc.neighbor;
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        if (out.cycles.size() == max_count) {
          out.truncated = true;
          return false;
        }
        out.cycles.push_back(path);
        out.lengths.push_back(prefix.back() + g.edge(inc.edge).weight);
        continue;
      }
      if (w <= root || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      prefix.push_back(prefix.back() + g.edge(inc.edge).weight);
      bool keep_going = extend(root);
      prefix.pop_back();
      path.pop_back();
      on_path[w] = 0;
      if (!keep_going) return false;
    }
    return true;
  };

  for (Vertex root = 0; root < n; ++root) {
    path = {root};
    prefix = {Rational(0)};
    on_path[root] = 1;
    bool keep_going = extend(root);
    on_path[root] = 0;
    if (!keep_going) break;
  }
  return out;
}

WeightedGraph cycle_graph(std::span<const Rational> weights) {
  if (weights.size() < 3) throw GraphError("a simple cycle needs at least three edges");
  WeightedGraph g(weights.size());
  for (std::size_t v = 0; v < weights.size(); ++v)
    g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % weights.size()), weights[v]);
  return g;
}

}  // namespace edgp
