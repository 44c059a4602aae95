#pragma once

// Brute-force reference implementations. They share no search code with the
// library and exist only to cross-check it.

#include "edgp/cnf.hpp"
#include "edgp/graph.hpp"
#include "edgp/realization.hpp"

#include <vector>

namespace edgp::oracle {

/// Realizations on the line found by trying every sign vector on a BFS
/// spanning forest. Components with an anchor are counted by raw positions,
/// the others modulo translation and reflection, independently per component.
std::vector<Realization> sign_vector_classes(const WeightedGraph& g);

/// Does some subset of values sum to half the total?
bool partition_solvable(const std::vector<long long>& values);

/// Smallest |sum sigma_v d_v| over all sign vectors, by plain recursion.
long long cycle_min_gap(const std::vector<long>& weights);

/// Satisfiability and model count by recursive splitting on variables.
bool satisfiable(const CnfFormula& f);
std::size_t model_count(const CnfFormula& f);

}  // namespace edgp::oracle
