#pragma once

#include "edgp/cnf.hpp"
#include "edgp/graph.hpp"
#include "edgp/realization.hpp"
#include "edgp/witness.hpp"

#include <array>
#include <set>
#include <vector>

namespace edgp {

// ---------------------------------------------------------------------------
// PARTITION -> EDGP_1
// ---------------------------------------------------------------------------

struct PartitionInstance {
  std::vector<long long> values;
};

/// Membership of each index in the "left-hand" side I of a split; the edge
/// {v, v+1} is drawn rightwards exactly when v is in I.
using PartitionSplit = std::vector<bool>;

struct PartitionReduction {
  WeightedGraph graph;
  ReductionWitness<PartitionSplit, Realization> witness;
};

/// Path 1..n+1 with edge {v, v+1} of weight a_v; both endpoints anchored at 0
/// so that any realization closes the cycle.
PartitionReduction reduce_partition(const PartitionInstance& p);

// ---------------------------------------------------------------------------
// 3SAT -> EDGP_1
// ---------------------------------------------------------------------------

/// Local layout of one clause gadget. Index 0 is A, 1 is B, 2..4 are the
/// clause's literal vertices L1..L3 and 5..12 are c1..c8.
namespace clause_gadget {

inline constexpr std::size_t kA = 0, kB = 1, kL1 = 2, kL2 = 3, kL3 = 4;
inline constexpr std::size_t c(std::size_t k) { return 4 + k; }  // c(1) .. c(8)
inline constexpr std::size_t kLocalVertices = 13;

struct LocalEdge {
  std::size_t a;
  std::size_t b;
  int weight;
};

/// The 13 edges owned by a clause; A-B and A-L_h belong to the literal gadget.
inline constexpr std::array<LocalEdge, 13> kEdges{{
    {kA, c(2), 4},   {kA, c(7), 2},   {kL1, c(2), 3},   {kL2, c(7), 1},   {c(2), c(4), 2},
    {c(7), c(3), 4}, {kB, c(1), 4},   {c(1), c(5), 2},  {c(5), c(6), 1},  {c(3), c(6), 1},
    {c(4), c(6), 1}, {kL3, c(8), 4},  {c(6), c(8), 2},
}};

/// The unique placement of c1..c8 for each literal triple with at least one
/// literal at +1 (A = 0, B = 2). Returns false for (-1, -1, -1).
bool placement(std::array<int, 3> literals, std::array<int, 8>& out);

}  // namespace clause_gadget

struct ClauseGadget {
  std::array<Vertex, 3> literals;  // L1..L3, repeated literals share a vertex
  std::array<Vertex, 8> c;         // c1..c8
};

struct CompiledSatGraph {
  WeightedGraph graph;
  Vertex anchor_a = 0;
  Vertex anchor_b = 1;
  std::uint32_t variable_count = 0;
  std::vector<std::array<Vertex, 2>> literal_vertices;  // [j-1] = {s_j, not s_j}
  std::vector<ClauseGadget> clauses;
  ReductionWitness<Assignment, Realization> witness;

  Vertex literal_vertex(Literal lit) const { return literal_vertices.at(lit.var - 1)[lit.negated ? 1 : 0]; }
};

/// Literal gadget plus one clause gadget per clause. Clauses with fewer than
/// three distinct literals are padded by repeating the last one; the forward
/// witness throws for assignments that falsify some clause.
CompiledSatGraph compile_3sat(const CnfFormula& f);

/// Literal gadget only (A, B and the s_j / not-s_j pairs).
WeightedGraph literal_gadget(std::uint32_t variable_count);

/// Positions of c6 reachable along the four paths of the clause gadget, given
/// the literal positions (each +1 or -1) and the anchors A = 0, B = 2.
struct ReachableSets {
  std::array<std::set<long>, 4> paths;
  std::set<long> intersection;
};

ReachableSets clause_gadget_reachable_sets(std::array<int, 3> literal_positions);

}  // namespace edgp
