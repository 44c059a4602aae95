#pragma once

// Exact Branch-and-Prune on the line.
//
// Vertices are placed one at a time. The next vertex is always taken from the
// frontier of already placed vertices, anchored ones first and then by id.
// A new vertex sits at parent +- weight (the + branch is tried first), an
// anchored one at its anchor, and every edge back to a placed vertex must be
// met exactly or the branch is pruned.
//
// Without anchors a component's root goes to 0 and the first vertex placed
// after it only takes the + branch. In 1D congruences are x -> +-x + c, so
// this keeps exactly one representative per congruence class.

#include "edgp/graph.hpp"
#include "edgp/realization.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace edgp {

enum class SearchStatus { Realizable, Unrealizable };

struct SearchReport {
  SearchStatus status = SearchStatus::Unrealizable;
  std::vector<Realization> realizations;
  std::uint64_t nodes_explored = 0;
  bool truncated = false;

  bool realizable() const { return status == SearchStatus::Realizable; }
};

/// Placement order used by the search.
struct SearchOrder {
  struct Step {
    Vertex vertex;
    std::optional<std::size_t> parent;  // position in `steps`
    Rational parent_weight;
    std::vector<std::pair<std::size_t, Rational>> back_edges;  // (position, weight), parent excluded
    bool plus_only = false;
  };
  std::vector<Step> steps;
};

SearchOrder search_order(const WeightedGraph& g);

/// Calls visit for every realization in search order until it returns false.
/// Returns the number of placements tried.
std::uint64_t bp_search(const WeightedGraph& g, const std::function<bool(const Realization&)>& visit);

/// First realization, or UNREALIZABLE once every branch is exhausted.
SearchReport bp_solve(const WeightedGraph& g);

/// Every realization modulo congruence (raw solutions when anchors are
/// present), at most cap of them.
SearchReport bp_enumerate(const WeightedGraph& g, std::size_t cap = static_cast<std::size_t>(-1));

struct AmbiguityResult {
  bool ambiguous = false;
  std::optional<Realization> witness;
  std::uint64_t nodes_explored = 0;
};

/// Is there a realization of g incongruent to x? Throws RealizationError when
/// x does not realize g.
AmbiguityResult decide_ambiguous(const WeightedGraph& g, const Realization& x);

/// A realization with every coordinate rational: x itself when g is anchored,
/// otherwise x translated so that vertex 1 sits at 0.
Realization rational_certificate(const WeightedGraph& g, const Realization& x);

}  // namespace edgp
