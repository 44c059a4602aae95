#pragma once

#include "edgp/graph.hpp"

#include <span>
#include <vector>

namespace edgp {

/// Vertex positions in R^K stored row-major (vertex v occupies
/// coords[v*K .. v*K+K-1]).
template <class Scalar>
class BasicRealization {
 public:
  BasicRealization() = default;
  BasicRealization(std::size_t vertex_count, std::size_t dimension)
      : dimension_(dimension), coords_(vertex_count * dimension) {}

  /// 1D convenience.
  explicit BasicRealization(std::vector<Scalar> line) : dimension_(1), coords_(std::move(line)) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t vertex_count() const { return dimension_ == 0 ? 0 : coords_.size() / dimension_; }

  Scalar& at(Vertex v, std::size_t k = 0) { return coords_.at(v * dimension_ + k); }
  const Scalar& at(Vertex v, std::size_t k = 0) const { return coords_.at(v * dimension_ + k); }

  std::span<Scalar> position(Vertex v) { return {coords_.data() + v * dimension_, dimension_}; }
  std::span<const Scalar> position(Vertex v) const { return {coords_.data() + v * dimension_, dimension_}; }

  const std::vector<Scalar>& coords() const { return coords_; }

  Scalar squared_distance(Vertex u, Vertex v) const {
    Scalar sum = 0;
    for (std::size_t k = 0; k < dimension_; ++k) {
      Scalar d = at(u, k) - at(v, k);
      sum += d * d;
    }
    return sum;
  }

  friend bool operator==(const BasicRealization&, const BasicRealization&) = default;

 private:
  std::size_t dimension_ = 1;
  std::vector<Scalar> coords_;
};

using Realization = BasicRealization<Rational>;
using RealRealization = BasicRealization<Real>;

/// Builds a 1D exact realization from integers; handy in tests and tables.
Realization line_realization(std::initializer_list<long> xs);

struct EdgeResidual {
  std::size_t edge;
  // K=1 exact: | |x_u - x_v| - w |; K>1 exact: | ||x_u - x_v||^2 - w^2 |.
  Rational residual;
};

struct RealEdgeResidual {
  std::size_t edge;
  Real relative_deviation;  // | ||x_u - x_v|| / w - 1 |
};

struct VerifyReport {
  bool ok = true;
  std::vector<EdgeResidual> edge_violations;
  std::vector<Vertex> anchor_violations;

  explicit operator bool() const { return ok; }
};

struct RealVerifyReport {
  bool ok = true;
  std::vector<RealEdgeResidual> edge_violations;
  std::vector<Vertex> anchor_violations;
  Real max_relative_deviation = 0;

  explicit operator bool() const { return ok; }
};

class RealizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact check of every edge and anchor. Throws RealizationError when x does
/// not cover the graph or has a different dimension.
VerifyReport verify_realization(const WeightedGraph& g, const Realization& x);

/// Relative tolerance on each edge length; anchors must match within
/// tolerance * max(1, |anchor|) per coordinate.
RealVerifyReport verify_realization(const WeightedGraph& g, const RealRealization& x,
                                    const Real& tolerance = Real("1e-9"));

/// Congruence via equality of all pairwise squared distances.
bool congruent(const Realization& x, const Realization& y);
bool congruent(const RealRealization& x, const RealRealization& y, const Real& tolerance = Real("1e-9"));

RealRealization to_real(const Realization& x);

}  // namespace edgp
