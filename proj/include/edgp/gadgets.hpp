#pragma once

#include "edgp/graph.hpp"
#include "edgp/realization.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edgp {

enum class GadgetKind { T3, T4, T5, T8, R1, R2, Clique, RbarK1, RbarK2 };

std::string to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);

/// A small graph substituted for an edge: terminals[0] is identified with the
/// edge's first endpoint and terminals[1] with its second.
struct GadgetTemplate {
  GadgetKind kind;
  std::size_t parameter = 0;  // K for cliques and Rbar gadgets, h for T_h
  WeightedGraph graph;
  std::vector<Vertex> terminals;
};

/// T_h for h in {3, 4, 5, 8}: vertices e1..e_{h+1}, each e_k (k >= 3) tied to
/// e_{k-1} by a unit edge and to e_{k-2} by a weight-2 edge. Terminals e1 and
/// e_{h+1} always land h apart on the line.
GadgetTemplate t_gadget(int h);

/// 3-4-5 rectangle frame f1..f4; terminals f1, f3 at distance 4.
GadgetTemplate r1_gadget();
/// Two R1 frames sharing the f3-f4 side plus the two diagonals of length 8;
/// terminals f1, f5.
GadgetTemplate r2_gadget();

/// Complete graph on K+1 vertices with every weight w.
GadgetTemplate clique_gadget(std::size_t k, const Rational& w = 1);

/// kind 1: two K-cliques of weight 3 joined by {i, K+i} of weight 4 and all
/// other cross pairs of weight 5; terminals 1 and K+1.
/// kind 2: a third clique glued on the same way, plus {i, 2K+i} of weight 8;
/// terminals 1 and 2K+1.
GadgetTemplate build_rbar(std::size_t k, int kind);

/// Template by kind name (T3, R1, Clique, RbarK1, ...); K is used where the
/// kind takes a dimension.
GadgetTemplate make_gadget(GadgetKind kind, std::size_t k = 2);

struct LiftedGraph {
  WeightedGraph graph;
  std::vector<std::vector<Vertex>> gadgets;  // vertices of each inserted copy, template order
  std::vector<GadgetKind> kinds;             // template of each copy
  std::size_t parameter = 0;                 // K passed to make_gadget
  std::size_t base_vertex_count = 0;         // original vertices keep their ids
  std::size_t line_axis = 0;                 // axis carrying the original line
  Rational scale = 1;                        // original length 1 becomes `scale`
};

/// Copies t into out with its terminals identified to u and v.
std::vector<Vertex> substitute_edge(WeightedGraph& out, Vertex u, Vertex v, const GadgetTemplate& t,
                                    const std::string& prefix);

/// Replaces every edge whose weight is not allowed by a copy of T_h.
LiftedGraph expand_weights(const WeightedGraph& g, std::span<const long> allowed);
LiftedGraph expand_weights(const WeightedGraph& g);

/// Weight-1 edges become R1, weight-2 edges R2; the result lives in the plane
/// at four times the original scale. Anchors a map to (4a, 0).
LiftedGraph lift_saxe(const WeightedGraph& g1);

/// Weight-1 edges become Rbar^K_1, weight-2 edges Rbar^K_2. Anchors a map to
/// 4a along the last axis.
LiftedGraph lift_rbar(const WeightedGraph& g1, std::size_t k);

/// Replaces the first weight-1 edge (lowest endpoint pair) by C^K_1, or every
/// weight-1 edge when replace_all is set. Anchors a map to (a, 0, ..., 0).
LiftedGraph lift_clique(const WeightedGraph& g1, std::size_t k, bool replace_all = false);

/// Canonical coordinates: T_h on the line (e_k at k - 1), cliques as regular
/// simplices, Rbar (and R1, R2) as (K-1)-simplices of side 3 stacked 4 apart
/// along the last axis.
RealRealization realize_gadget(const GadgetTemplate& t);

/// Places the original vertices at scale * x1 on the line axis and every copy
/// by a reflection and axis swap of realize_gadget's coordinates.
RealRealization realize_lifted(const LiftedGraph& lifted, const Realization& x1);

/// Corners of a regular simplex with `points` vertices and the given side, in
/// R^dimension (dimension >= points - 1); point j spans the first j axes.
std::vector<std::vector<Real>> regular_simplex(std::size_t points, const Real& side, std::size_t dimension);

/// Rank of the Gram matrix built from squared distances, or nullopt when no
/// Euclidean embedding exists (Gram matrix not positive semidefinite).
std::optional<std::size_t> minimal_embedding_dimension(const std::vector<std::vector<Rational>>& squared);
/// Same for a complete graph; throws GraphError otherwise.
std::optional<std::size_t> minimal_embedding_dimension(const WeightedGraph& complete_graph);
/// Restriction of a complete graph to the given vertices.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices);

struct FlexibilityDemo {
  LiftedGraph lifted;
  RealRealization first;
  RealRealization second;  // one gadget rotated about the line
  bool first_verifies = false;
  bool second_verifies = false;
  bool congruent = true;
};

/// Lifts every unit edge of the 1D graph to C^K_1, realizes it around the 1D
/// realization x1, and rotates the second gadget by `angle` about the line.
/// Needs K >= 3 and at least two unit edges.
FlexibilityDemo clique_flexibility_demo(const WeightedGraph& g1, const Realization& x1, std::size_t k,
                                        const Real& angle);

/// Rotation of the whole realization in the plane of axes (a, b).
RealRealization rotate(const RealRealization& x, std::size_t a, std::size_t b, const Real& angle);

}  // namespace edgp
