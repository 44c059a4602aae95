#pragma once

// Approximate realizations on the line and in R^K.
//
// A realization y is eps-approximate when every edge satisfies
//   (1 - eps) d_uv <= ||y_u - y_v|| <= (1 + eps) d_uv.

#include "edgp/graph.hpp"
#include "edgp/realization.hpp"

#include <optional>
#include <span>
#include <vector>

namespace edgp {

struct ApproxReport {
  bool ok = false;
  Real epsilon_achieved = 0;  // max relative edge deviation, always recomputed
};

/// Throws RealizationError on a shape mismatch, std::invalid_argument when
/// eps is outside [0, 1).
ApproxReport verify_approx(const WeightedGraph& g, const RealRealization& y, const Real& eps);

inline constexpr std::size_t kMaxCycleEdges = 24;

struct CycleAnalysis {
  std::vector<Integer> weights;
  Integer length;                 // L
  Integer min_closure_gap;        // min over sign vectors of |sum sigma_v d_v|
  std::vector<int> best_signs;    // first sign vector reaching the gap, sigma_1 = +1
  Rational delta_threshold;       // 2 / L
  Rational least_tolerance;       // min_closure_gap / L
  bool exactly_closable() const { return min_closure_gap == 0; }
};

/// Exhaustive over sign vectors; throws std::invalid_argument above
/// kMaxCycleEdges edges or on non-positive weights.
CycleAnalysis analyze_cycle(std::span<const Integer> weights);
CycleAnalysis analyze_cycle(std::span<const long> weights);

enum class ApproxVerdict { Yes, No, Indeterminate };

struct CycleDecision {
  ApproxVerdict verdict = ApproxVerdict::No;
  CycleAnalysis analysis;
  // Set on YES: stretched lengths, the signs used and the resulting positions
  // x_1 = 0, x_{v+1} = x_v + sigma_v * lengths[v].
  std::vector<Rational> lengths;
  std::vector<int> signs;
  std::vector<Rational> positions;
};

/// YES when the cycle admits a delta-approximate realization. The witness
/// closes the gap greedily in edge order, each edge stretched or shrunk by at
/// most delta * d_v.
CycleDecision cycle_approx_decide(std::span<const long> weights, const Rational& delta);

/// The (eps, delta) version: YES when the least feasible tolerance is at most
/// eps, NO when it exceeds delta, INDETERMINATE in between.
CycleDecision cycle_approx_classify(std::span<const long> weights, const Rational& eps, const Rational& delta);

const char* to_string(ApproxVerdict v);

/// Absolute guard used when deciding whether a high-precision value is an
/// integer or a length equals its weight.
Real integer_guard();

struct RoundingStep {
  Vertex vertex;
  std::optional<Vertex> parent;
  int rule = 0;  // 1..6 for the per-edge cases, 0 for a component root
};

struct RoundingResult {
  Realization x;
  std::vector<RoundingStep> steps;          // in processing order
  std::vector<Vertex> integer_hits;         // floor/ceil case applied to an already integral y
  std::vector<Vertex> degenerate;           // y equal to its parent's position
  bool verified = false;
};

/// Rounds a 1D approximate realization edge by edge along the branch-and-prune
/// placement order. Roots take their anchor or round(y). For a vertex with
/// parent p and weight d:
///   y_v > y_p: over-length -> floor(y_v), under-length -> ceil(y_v), exact -> y_v
///   y_v < y_p: over-length -> ceil(y_v),  under-length -> floor(y_v), exact -> y_v
/// Non-tree edges are only checked by the final exact verification.
RoundingResult round_approximate(const WeightedGraph& g, const RealRealization& y);

struct GadgetCycleReport {
  std::size_t cycle_count = 0;
  bool truncated = false;
  Rational max_length;
  Rational delta_threshold;                        // 2 / max_length
  std::vector<std::pair<Rational, std::size_t>> length_histogram;
  std::vector<std::size_t> cover;                  // indices into the listing
  bool cover_complete = false;                     // every edge lies on a cover cycle
  CycleListing listing;
};

/// Lists simple cycles (at most cap), then picks a greedy edge cover that
/// starts from every cycle of maximum length.
GadgetCycleReport analyze_gadget_cycles(const WeightedGraph& g, std::size_t cap = 1'000'000);

}  // namespace edgp
