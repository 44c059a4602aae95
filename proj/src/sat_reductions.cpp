#include "edgp/sat_reductions.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>

namespace edgp {

PartitionReduction reduce_partition(const PartitionInstance& p) {
  const std::size_t n = p.values.size();
  if (n < 2) throw std::invalid_argument("PARTITION reduction needs at least two values");
  for (long long a : p.values)
    if (a < 1) throw std::invalid_argument("PARTITION values must be positive integers");

  WeightedGraph g(n + 1);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1), Rational(static_cast<long>(p.values[v])));
  g.set_anchor(0, Rational(0));
  g.set_anchor(static_cast<Vertex>(n), Rational(0));

  auto values = p.values;
  PartitionReduction out{std::move(g), {}};
  out.witness.forward = [values](const PartitionSplit& right) {
    if (right.size() != values.size()) throw std::invalid_argument("split size does not match the instance");
    std::vector<Rational> xs{Rational(0)};
    for (std::size_t v = 0; v < values.size(); ++v)
      xs.push_back(xs.back() + (right[v] ? Rational(static_cast<long>(values[v])) : Rational(-static_cast<long>(values[v]))));
    return Realization(std::move(xs));
  };
  out.witness.backward = [n](const Realization& x) {
    if (x.vertex_count() != n + 1 || x.dimension() != 1)
      throw std::invalid_argument("realization does not match the PARTITION path");
    PartitionSplit right(n);
    for (std::size_t v = 0; v < n; ++v) right[v] = x.at(static_cast<Vertex>(v + 1)) > x.at(static_cast<Vertex>(v));
    return right;
  };
  return out;
}

namespace clause_gadget {

bool placement(std::array<int, 3> literals, std::array<int, 8>& out) {
  struct Row {
    std::array<int, 3> literals;
    std::array<int, 8> c;
  };
  static constexpr std::array<Row, 7> kRows{{
      {{1, 1, 1}, {6, 4, 6, 6, 8, 7, 2, 5}},
      {{1, 1, -1}, {6, 4, 6, 6, 4, 5, 2, 3}},
      {{1, -1, 1}, {6, 4, 2, 2, 4, 3, -2, 5}},
      {{-1, 1, 1}, {-2, -4, -2, -2, 0, -1, 2, -3}},
      {{1, -1, -1}, {-2, 4, 2, 2, 0, 1, -2, 3}},
      {{-1, 1, -1}, {-2, -4, -2, -2, -4, -3, 2, -5}},
      {{-1, -1, 1}, {-2, -4, -6, -6, -4, -5, -2, -3}},
  }};
  for (const auto& row : kRows)
    if (row.literals == literals) {
      out = row.c;
      return true;
    }
  return false;
}

}  // namespace clause_gadget

WeightedGraph literal_gadget(std::uint32_t variable_count) {
  WeightedGraph g;
  Vertex a = g.add_vertex("A");
  Vertex b = g.add_vertex("B");
  g.add_edge(a, b, 2);
  for (std::uint32_t j = 1; j <= variable_count; ++j) {
    Vertex pos = g.add_vertex("s" + std::to_string(j));
    Vertex neg = g.add_vertex("s" + std::to_string(j) + "bar");
    g.add_edge(a, pos, 1);
    g.add_edge(a, neg, 1);
    g.add_edge(pos, neg, 2);
  }
  g.set_anchor(a, Rational(0));
  g.set_anchor(b, Rational(2));
  return g;
}

CompiledSatGraph compile_3sat(const CnfFormula& f) {
  const std::uint32_t n = f.variable_count();
  CompiledSatGraph out;
  out.graph = literal_gadget(n);
  out.variable_count = n;
  out.anchor_a = 0;
  out.anchor_b = 1;
  for (std::uint32_t j = 0; j < n; ++j) out.literal_vertices.push_back({2 + 2 * j, 3 + 2 * j});

  for (std::size_t i = 0; i < f.clause_count(); ++i) {
    Clause lits = distinct_literals(f.clause(i));
    if (lits.empty()) throw CnfError("clause " + std::to_string(i + 1) + " is empty");
    if (lits.size() > 3)
      throw CnfError("clause " + std::to_string(i + 1) + " has " + std::to_string(lits.size()) +
                     " distinct literals, at most 3 allowed");
    while (lits.size() < 3) lits.push_back(lits.back());

    ClauseGadget gadget{};
    std::array<Vertex, clause_gadget::kLocalVertices> local{};
    local[clause_gadget::kA] = out.anchor_a;
    local[clause_gadget::kB] = out.anchor_b;
    for (std::size_t h = 0; h < 3; ++h) {
      gadget.literals[h] = out.literal_vertex(lits[h]);
      local[clause_gadget::kL1 + h] = gadget.literals[h];
    }
    for (std::size_t k = 1; k <= 8; ++k) {
      gadget.c[k - 1] = out.graph.add_vertex("c_" + std::to_string(i + 1) + "_" + std::to_string(k));
      local[clause_gadget::c(k)] = gadget.c[k - 1];
    }
    for (const auto& e : clause_gadget::kEdges) out.graph.add_edge(local[e.a], local[e.b], e.weight);
    out.clauses.push_back(gadget);
  }

  auto layout = std::make_shared<const CompiledSatGraph>(CompiledSatGraph{
      WeightedGraph(), out.anchor_a, out.anchor_b, n, out.literal_vertices, out.clauses, {}});
  const std::size_t vertex_count = out.graph.vertex_count();

  out.witness.forward = [layout, vertex_count](const Assignment& a) {
    if (a.size() < layout->variable_count) throw CnfError("assignment is not total");
    Realization x(vertex_count, 1);
    x.at(layout->anchor_a) = 0;
    x.at(layout->anchor_b) = 2;
    for (std::uint32_t j = 1; j <= layout->variable_count; ++j) {
      x.at(layout->literal_vertices[j - 1][0]) = a[j] ? 1 : -1;
      x.at(layout->literal_vertices[j - 1][1]) = a[j] ? -1 : 1;
    }
    for (std::size_t i = 0; i < layout->clauses.size(); ++i) {
      const auto& gadget = layout->clauses[i];
      std::array<int, 3> lits{};
      for (std::size_t h = 0; h < 3; ++h) lits[h] = static_cast<int>(x.at(gadget.literals[h]).get_num().get_si());
      std::array<int, 8> c{};
      if (!clause_gadget::placement(lits, c))
        throw CnfError("assignment " + a.bits() + " falsifies clause " + std::to_string(i + 1));
      for (std::size_t k = 0; k < 8; ++k) x.at(gadget.c[k]) = c[k];
    }
    return x;
  };
  out.witness.backward = [layout](const Realization& x) {
    std::vector<bool> values(layout->variable_count);
    for (std::uint32_t j = 0; j < layout->variable_count; ++j) values[j] = sgn(x.at(layout->literal_vertices[j][0])) > 0;
    return Assignment(std::move(values));
  };
  return out;
}

ReachableSets clause_gadget_reachable_sets(std::array<int, 3> literal_positions) {
  using namespace clause_gadget;
  for (int p : literal_positions)
    if (p != 1 && p != -1) throw std::invalid_argument("literal positions must be +1 or -1");

  struct WeightedPair {
    std::size_t a, b;
    int w;
  };
  std::vector<WeightedPair> edges{{kA, kB, 2}, {kA, kL1, 1}, {kA, kL2, 1}, {kA, kL3, 1}};
  for (const auto& e : kEdges) edges.push_back({e.a, e.b, e.weight});

  std::array<std::optional<long>, kLocalVertices> fixed{};
  fixed[kA] = 0;
  fixed[kB] = 2;
  for (std::size_t h = 0; h < 3; ++h) fixed[kL1 + h] = literal_positions[h];

  auto weight = [&](std::size_t u, std::size_t v) {
    for (const auto& e : edges)
      if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) return e.w;
    throw std::logic_error("clause gadget path uses a missing edge");
  };

  // Positions of v consistent with every fixed neighbour.
  auto admissible = [&](std::size_t v, std::set<long> candidates) {
    if (fixed[v]) return candidates.contains(*fixed[v]) ? std::set<long>{*fixed[v]} : std::set<long>{};
    for (const auto& e : edges) {
      std::size_t other = e.a == v ? e.b : e.b == v ? e.a : kLocalVertices;
      if (other == kLocalVertices || !fixed[other]) continue;
      std::set<long> kept;
      for (long p : candidates)
        if (std::labs(p - *fixed[other]) == e.w) kept.insert(p);
      candidates = std::move(kept);
    }
    return candidates;
  };

  const std::array<std::vector<std::size_t>, 4> paths{{
      {kA, kL2, c(7), c(3), c(6)},
      {kA, kB, c(1), c(5), c(6)},
      {kA, kL1, c(2), c(4), c(6)},
      {kA, kL3, c(8), c(6)},
  }};

  ReachableSets out;
  for (std::size_t h = 0; h < paths.size(); ++h) {
    std::set<long> current{0};
    for (std::size_t step = 1; step < paths[h].size(); ++step) {
      const int w = weight(paths[h][step - 1], paths[h][step]);
      std::set<long> next;
      for (long p : current) {
        next.insert(p + w);
        next.insert(p - w);
      }
      current = admissible(paths[h][step], std::move(next));
    }
    out.paths[h] = std::move(current);
  }
  out.intersection = out.paths[0];
  for (std::size_t h = 1; h < 4; ++h) {
    std::set<long> kept;
    std::set_intersection(out.intersection.begin(), out.intersection.end(), out.paths[h].begin(),
                          out.paths[h].end(), std::inserter(kept, kept.end()));
    out.intersection = std::move(kept);
  }
  return out;
}

}  // namespace edgp
