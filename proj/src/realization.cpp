#include "edgp/realization.hpp"

#include <boost/multiprecision/number.hpp>

#include <algorithm>

namespace edgp {

namespace {

template <class Scalar>
void check_shape(const WeightedGraph& g, const BasicRealization<Scalar>& x) {
  if (x.dimension() != g.dimension())
    throw RealizationError("realization has dimension " + std::to_string(x.dimension()) +
                           " but the graph has dimension " + std::to_string(g.dimension()));
  if (x.vertex_count() != g.vertex_count())
    throw RealizationError("realization places " + std::to_string(x.vertex_count()) +
                           " vertices but the graph has " + std::to_string(g.vertex_count()));
}

template <class Scalar>
void check_same_shape(const BasicRealization<Scalar>& x, const BasicRealization<Scalar>& y) {
  if (x.dimension() != y.dimension() || x.vertex_count() != y.vertex_count())
    throw RealizationError("realizations cover different vertex sets or dimensions");
}

}  // namespace

Realization line_realization(std::initializer_list<long> xs) {
  std::vector<Rational> coords;
  for (long v : xs) coords.emplace_back(v);
  return Realization(std::move(coords));
}

VerifyReport verify_realization(const WeightedGraph& g, const Realization& x) {
  check_shape(g, x);
  VerifyReport report;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (x.dimension() == 1) {
      Rational dist = abs(x.at(e.u) - x.at(e.v));
      if (dist != e.weight) report.edge_violations.push_back({i, Rational(abs(dist - e.weight))});
    } else {
      Rational sq = x.squared_distance(e.u, e.v);
      Rational target = e.weight * e.weight;
      if (sq != target) report.edge_violations.push_back({i, Rational(abs(sq - target))});
    }
  }
  for (const auto& [v, pos] : g.anchors()) {
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (x.at(v, k) != pos[k]) {
        report.anchor_violations.push_back(v);
        break;
      }
  }
  report.ok = report.edge_violations.empty() && report.anchor_violations.empty();
  return report;
}

RealVerifyReport verify_realization(const WeightedGraph& g, const RealRealization& x, const Real& tolerance) {
  check_shape(g, x);
  RealVerifyReport report;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    Real w = edgp::to_real(e.weight);
    Real dev = abs(sqrt(x.squared_distance(e.u, e.v)) / w - 1);
    report.max_relative_deviation = std::max(report.max_relative_deviation, dev);
    if (dev > tolerance) report.edge_violations.push_back({i, dev});
  }
  for (const auto& [v, pos] : g.anchors()) {
    for (std::size_t k = 0; k < pos.size(); ++k) {
      Real a = edgp::to_real(pos[k]);
      if (abs(x.at(v, k) - a) > tolerance * std::max(Real(1), abs(a))) {
        report.anchor_violations.push_back(v);
        break;
      }
    }
  }
  report.ok = report.edge_violations.empty() && report.anchor_violations.empty();
  return report;
}

bool congruent(const Realization& x, const Realization& y) {
  check_same_shape(x, y);
  const auto n = static_cast<Vertex>(x.vertex_count());
  if (x.dimension() == 1) {
    // On the line, equal distance matrices means y = x + c or y = -x + c.
    bool translate = true, reflect = true;
    for (Vertex v = 1; v < n && (translate || reflect); ++v) {
      Rational dx = x.at(v) - x.at(0);
      Rational dy = y.at(v) - y.at(0);
      translate = translate && dx == dy;
      reflect = reflect && dx == -dy;
    }
    return translate || reflect;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (x.squared_distance(u, v) != y.squared_distance(u, v)) return false;
  return true;
}

bool congruent(const RealRealization& x, const RealRealization& y, const Real& tolerance) {
  check_same_shape(x, y);
  const auto n = static_cast<Vertex>(x.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      Real a = x.squared_distance(u, v);
      Real b = y.squared_distance(u, v);
      if (abs(a - b) > tolerance * std::max({Real(1), abs(a), abs(b)})) return false;
    }
  return true;
}

RealRealization to_real(const Realization& x) {
  RealRealization out(x.vertex_count(), x.dimension());
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    for (std::size_t k = 0; k < x.dimension(); ++k) out.at(v, k) = edgp::to_real(x.at(v, k));
  return out;
}

}  // namespace edgp
