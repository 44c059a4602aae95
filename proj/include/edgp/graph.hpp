#pragma once

#include "edgp/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edgp {

// Dense 0-based vertex index. Text formats use 1-based ids.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  Rational weight;
};

struct Incidence {
  Vertex neighbor;
  std::size_t edge;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph with exact positive weights, optional anchored
/// positions and an intended embedding dimension.
///
/// Graphs are built incrementally by the reductions and treated as immutable
/// values afterwards.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t vertex_count = 0, std::size_t dimension = 1);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dimension() const { return dimension_; }
  void set_dimension(std::size_t k);

  Vertex add_vertex(std::string name = {});

  /// Throws on self-loops, non-positive weights, unknown vertices and on an
  /// existing edge with a different weight. Re-adding the same edge with the
  /// same weight is a no-op and returns false.
  bool add_edge(Vertex u, Vertex v, const Rational& weight);

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const Incidence> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::optional<std::size_t> find_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  void set_anchor(Vertex v, std::vector<Rational> position);
  void set_anchor(Vertex v, const Rational& position) { set_anchor(v, std::vector<Rational>{position}); }
  void clear_anchors() { anchors_.clear(); }
  bool is_anchored(Vertex v) const { return anchors_.contains(v); }
  const std::vector<Rational>* anchor(Vertex v) const;
  const std::map<Vertex, std::vector<Rational>>& anchors() const { return anchors_; }

  void set_name(Vertex v, std::string name);
  /// Label if one was given, otherwise the 1-based id.
  std::string name(Vertex v) const;
  bool has_name(Vertex v) const { return !names_.at(v).empty(); }
  std::optional<Vertex> find_by_name(const std::string& name) const;

  bool is_complete() const;
  bool is_connected() const;
  /// Component index per vertex, numbered in order of lowest member.
  std::vector<std::size_t> components() const;

 private:
  void check_vertex(Vertex v) const;

  std::size_t dimension_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<Vertex, std::vector<Rational>> anchors_;
  std::vector<std::string> names_;
};

bool same_edges(const WeightedGraph& a, const WeightedGraph& b);

/// Result of rescaling to coprime integer weights: original = scaled * scale.
struct ScaledGraph {
  WeightedGraph graph;
  Rational scale;
};

ScaledGraph scale_to_integer(const WeightedGraph& g);

/// Simple cycle of weight-length `length`, listed from its lowest vertex.
struct CycleListing {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Rational> lengths;
  bool truncated = false;

  std::size_t size() const { return cycles.size(); }
  std::optional<Rational> max_length() const;
};

/// Every simple cycle once (modulo rotation and reversal), at most max_count.
CycleListing enumerate_simple_cycles(const WeightedGraph& g, std::size_t max_count);

/// Simple cycle graph v1 - v2 - ... - vn - v1 with edge {v, v+1} weighted
/// weights[v]. Needs at least three weights.
WeightedGraph cycle_graph(std::span<const Rational> weights);

}  // namespace edgp
