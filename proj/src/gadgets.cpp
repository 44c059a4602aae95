#include "edgp/gadgets.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace edgp {

namespace {

GadgetTemplate make_template(GadgetKind kind, std::size_t parameter, std::size_t vertices, const std::string& prefix) {
  GadgetTemplate t{kind, parameter, WeightedGraph(0, 1), {}};
  for (std::size_t i = 1; i <= vertices; ++i) t.graph.add_vertex(prefix + std::to_string(i));
  return t;
}

// 1-based edge list helper for the fixed tables below.
void add_edges(WeightedGraph& g, std::initializer_list<std::array<int, 3>> edges) {
  for (const auto& [a, b, w] : edges) g.add_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1), w);
}

std::string lowercase(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

void require_line_graph(const WeightedGraph& g) {
  if (g.dimension() != 1) throw GraphError("lifting expects a graph on the line (K = 1)");
}

LiftedGraph start_lift(const WeightedGraph& g1, std::size_t dimension) {
  LiftedGraph out;
  out.graph = WeightedGraph(0, dimension);
  for (Vertex v = 0; v < g1.vertex_count(); ++v) out.graph.add_vertex(g1.has_name(v) ? g1.name(v) : std::string{});
  out.base_vertex_count = g1.vertex_count();
  return out;
}

std::string copy_prefix(const WeightedGraph& g, const Edge& e) {
  return "g" + g.name(e.u) + "_" + g.name(e.v) + "_";
}

}  // namespace

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::T3: return "T3";
    case GadgetKind::T4: return "T4";
    case GadgetKind::T5: return "T5";
    case GadgetKind::T8: return "T8";
    case GadgetKind::R1: return "R1";
    case GadgetKind::R2: return "R2";
    case GadgetKind::Clique: return "Clique";
    case GadgetKind::RbarK1: return "RbarK1";
    case GadgetKind::RbarK2: return "RbarK2";
  }
  return "?";
}

GadgetKind parse_gadget_kind(const std::string& name) {
  const std::string s = lowercase(name);
  if (s == "t3") return GadgetKind::T3;
  if (s == "t4") return GadgetKind::T4;
  if (s == "t5") return GadgetKind::T5;
  if (s == "t8") return GadgetKind::T8;
  if (s == "r1") return GadgetKind::R1;
  if (s == "r2") return GadgetKind::R2;
  if (s == "clique" || s == "cliquek") return GadgetKind::Clique;
  if (s == "rbar1" || s == "rbark1") return GadgetKind::RbarK1;
  if (s == "rbar2" || s == "rbark2") return GadgetKind::RbarK2;
  throw std::invalid_argument("unknown gadget kind '" + name + "'");
}

GadgetTemplate t_gadget(int h) {
  GadgetKind kind;
  switch (h) {
    case 3: kind = GadgetKind::T3; break;
    case 4: kind = GadgetKind::T4; break;
    case 5: kind = GadgetKind::T5; break;
    case 8: kind = GadgetKind::T8; break;
    default: throw std::invalid_argument("T gadgets exist for h in {3, 4, 5, 8}, not " + std::to_string(h));
  }
  auto t = make_template(kind, static_cast<std::size_t>(h), static_cast<std::size_t>(h) + 1, "e");
  add_edges(t.graph, {{1, 3, 2}, {1, 2, 1}, {2, 3, 1}});
  for (int k = 4; k <= h + 1; ++k) add_edges(t.graph, {{k - 1, k, 1}, {k - 2, k, 2}});
  t.terminals = {0, static_cast<Vertex>(h)};
  return t;
}

GadgetTemplate r1_gadget() {
  auto t = make_template(GadgetKind::R1, 2, 4, "f");
  add_edges(t.graph, {{1, 3, 4}, {1, 4, 5}, {1, 2, 3}, {3, 4, 3}, {3, 2, 5}, {4, 2, 4}});
  t.graph.set_dimension(2);
  t.terminals = {0, 2};
  return t;
}

GadgetTemplate r2_gadget() {
  auto t = make_template(GadgetKind::R2, 2, 6, "f");
  add_edges(t.graph, {{1, 3, 4}, {1, 4, 5}, {1, 2, 3}, {3, 4, 3}, {3, 2, 5}, {4, 2, 4}});
  add_edges(t.graph, {{3, 5, 4}, {4, 6, 4}, {3, 6, 5}, {4, 5, 5}, {5, 6, 3}, {1, 5, 8}, {2, 6, 8}});
  t.graph.set_dimension(2);
  t.terminals = {0, 4};
  return t;
}

GadgetTemplate clique_gadget(std::size_t k, const Rational& w) {
  if (k < 1) throw std::invalid_argument("clique gadget needs K >= 1");
  auto t = make_template(GadgetKind::Clique, k, k + 1, "k");
  for (Vertex a = 0; a <= k; ++a)
    for (Vertex b = a + 1; b <= k; ++b) t.graph.add_edge(a, b, w);
  t.graph.set_dimension(k);
  t.terminals = {0, 1};
  return t;
}

GadgetTemplate build_rbar(std::size_t k, int kind) {
  if (k < 2) throw std::invalid_argument("Rbar gadgets need K >= 2");
  if (kind != 1 && kind != 2) throw std::invalid_argument("Rbar kind must be 1 or 2");
  const std::size_t layers = kind == 1 ? 2 : 3;
  auto t = make_template(kind == 1 ? GadgetKind::RbarK1 : GadgetKind::RbarK2, k, layers * k, "r");
  auto id = [k](std::size_t layer, std::size_t i) { return static_cast<Vertex>(layer * k + i); };
  for (std::size_t layer = 0; layer < layers; ++layer)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) t.graph.add_edge(id(layer, i), id(layer, j), 3);
  for (std::size_t layer = 0; layer + 1 < layers; ++layer)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) t.graph.add_edge(id(layer, i), id(layer + 1, j), i == j ? 4 : 5);
  if (kind == 2)
    for (std::size_t i = 0; i < k; ++i) t.graph.add_edge(id(0, i), id(2, i), 8);
  t.graph.set_dimension(k);
  t.terminals = {id(0, 0), id(layers - 1, 0)};
  return t;
}

GadgetTemplate make_gadget(GadgetKind kind, std::size_t k) {
  switch (kind) {
    case GadgetKind::T3: return t_gadget(3);
    case GadgetKind::T4: return t_gadget(4);
    case GadgetKind::T5: return t_gadget(5);
    case GadgetKind::T8: return t_gadget(8);
    case GadgetKind::R1: return r1_gadget();
    case GadgetKind::R2: return r2_gadget();
    case GadgetKind::Clique: return clique_gadget(k);
    case GadgetKind::RbarK1: return build_rbar(k, 1);
    case GadgetKind::RbarK2: return build_rbar(k, 2);
  }
  throw std::invalid_argument("unknown gadget kind");
}

std::vector<Vertex> substitute_edge(WeightedGraph& out, Vertex u, Vertex v, const GadgetTemplate& t,
                                    const std::string& prefix) {
  std::vector<Vertex> map(t.graph.vertex_count());
  for (Vertex i = 0; i < t.graph.vertex_count(); ++i) {
    if (i == t.terminals[0]) map[i] = u;
    else if (i == t.terminals[1]) map[i] = v;
    else map[i] = out.add_vertex(prefix + t.graph.name(i));
  }
  for (const auto& e : t.graph.edges()) out.add_edge(map[e.u], map[e.v], e.weight);
  return map;
}

LiftedGraph expand_weights(const WeightedGraph& g, std::span<const long> allowed) {
  require_line_graph(g);
  LiftedGraph out = start_lift(g, 1);
  for (const auto& [v, pos] : g.anchors()) out.graph.set_anchor(v, pos);
  for (const auto& e : g.edges()) {
    const bool keep = std::any_of(allowed.begin(), allowed.end(), [&](long a) { return e.weight == a; });
    if (keep) {
      out.graph.add_edge(e.u, e.v, e.weight);
      continue;
    }
    int h = 0;
    for (int cand : {3, 4, 5, 8})
      if (e.weight == cand) h = cand;
    if (h == 0)
      throw GraphError("edge {" + g.name(e.u) + "," + g.name(e.v) + "} has weight " + format_rational(e.weight) +
                       ", which no T gadget expands");
    GadgetTemplate t = t_gadget(h);
    out.gadgets.push_back(substitute_edge(out.graph, e.u, e.v, t, copy_prefix(g, e)));
    out.kinds.push_back(t.kind);
  }
  return out;
}

LiftedGraph expand_weights(const WeightedGraph& g) {
  static constexpr std::array<long, 2> kUnitAndTwo{1, 2};
  return expand_weights(g, kUnitAndTwo);
}

LiftedGraph lift_saxe(const WeightedGraph& g1) {
  require_line_graph(g1);
  LiftedGraph out = start_lift(g1, 2);
  out.parameter = 2;
  out.scale = 4;
  for (const auto& [v, pos] : g1.anchors()) out.graph.set_anchor(v, {Rational(4 * pos[0]), Rational(0)});
  const GadgetTemplate unit = r1_gadget(), two = r2_gadget();
  for (const auto& e : g1.edges()) {
    if (e.weight != 1 && e.weight != 2)
      throw GraphError("planar lift needs weights in {1, 2}; expand the graph first");
    const GadgetTemplate& t = e.weight == 1 ? unit : two;
    out.gadgets.push_back(substitute_edge(out.graph, e.u, e.v, t, copy_prefix(g1, e)));
    out.kinds.push_back(t.kind);
  }
  return out;
}

LiftedGraph lift_rbar(const WeightedGraph& g1, std::size_t k) {
  require_line_graph(g1);
  const GadgetTemplate unit = build_rbar(k, 1), two = build_rbar(k, 2);
  LiftedGraph out = start_lift(g1, k);
  out.parameter = k;
  out.scale = 4;
  out.line_axis = k - 1;
  for (const auto& [v, pos] : g1.anchors()) {
    std::vector<Rational> p(k, Rational(0));
    p[k - 1] = 4 * pos[0];
    out.graph.set_anchor(v, std::move(p));
  }
  for (const auto& e : g1.edges()) {
    if (e.weight != 1 && e.weight != 2) throw GraphError("Rbar lift needs weights in {1, 2}; expand the graph first");
    const GadgetTemplate& t = e.weight == 1 ? unit : two;
    out.gadgets.push_back(substitute_edge(out.graph, e.u, e.v, t, copy_prefix(g1, e)));
    out.kinds.push_back(t.kind);
  }
  return out;
}

LiftedGraph lift_clique(const WeightedGraph& g1, std::size_t k, bool replace_all) {
  require_line_graph(g1);
  if (k < 2) throw std::invalid_argument("clique lift needs K >= 2");
  const GadgetTemplate t = clique_gadget(k);
  LiftedGraph out = start_lift(g1, k);
  out.parameter = k;
  for (const auto& [v, pos] : g1.anchors()) {
    std::vector<Rational> p(k, Rational(0));
    p[0] = pos[0];
    out.graph.set_anchor(v, std::move(p));
  }

  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < g1.edge_count(); ++i)
    if (g1.edge(i).weight == 1) targets.push_back(i);
  if (targets.empty()) throw GraphError("clique lift needs a weight-1 edge");
  if (!replace_all) {
    auto key = [&](std::size_t i) {
      const Edge& e = g1.edge(i);
      return std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
    };
    targets = {*std::min_element(targets.begin(), targets.end(),
                                 [&](std::size_t a, std::size_t b) { return key(a) < key(b); })};
  }
  for (std::size_t i = 0; i < g1.edge_count(); ++i) {
    const Edge& e = g1.edge(i);
    if (std::find(targets.begin(), targets.end(), i) == targets.end()) {
      out.graph.add_edge(e.u, e.v, e.weight);
      continue;
    }
    out.gadgets.push_back(substitute_edge(out.graph, e.u, e.v, t, copy_prefix(g1, e)));
    out.kinds.push_back(t.kind);
  }
  return out;
}

std::vector<std::vector<Real>> regular_simplex(std::size_t points, const Real& side, std::size_t dimension) {
  if (points == 0) return {};
  if (dimension + 1 < points) throw std::invalid_argument("simplex does not fit in the requested dimension");
  std::vector<std::vector<Real>> p(points, std::vector<Real>(dimension, Real(0)));
  for (std::size_t j = 1; j < points; ++j) {
    // Centroid of the previous j corners, lifted along axis j-1.
    std::vector<Real> c(dimension, Real(0));
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t a = 0; a < dimension; ++a) c[a] += p[i][a];
    for (auto& v : c) v /= j;
    Real r2 = 0;
    for (std::size_t a = 0; a < dimension; ++a) r2 += (c[a] - p[0][a]) * (c[a] - p[0][a]);
    c[j - 1] = sqrt(side * side - r2);
    p[j] = std::move(c);
  }
  return p;
}

RealRealization realize_gadget(const GadgetTemplate& t) {
  const std::size_t n = t.graph.vertex_count();
  switch (t.kind) {
    case GadgetKind::T3:
    case GadgetKind::T4:
    case GadgetKind::T5:
    case GadgetKind::T8: {
      RealRealization x(n, 1);
      for (Vertex v = 0; v < n; ++v) x.at(v) = v;
      return x;
    }
    case GadgetKind::Clique: {
      const std::size_t k = t.parameter;
      RealRealization x(n, k);
      auto corners = regular_simplex(n, to_real(t.graph.edge(0).weight), k);
      for (Vertex v = 0; v < n; ++v)
        for (std::size_t a = 0; a < k; ++a) x.at(v, a) = corners[v][a];
      return x;
    }
    case GadgetKind::R1:
    case GadgetKind::R2:
    case GadgetKind::RbarK1:
    case GadgetKind::RbarK2: {
      const std::size_t k = t.parameter;
      RealRealization x(n, k);
      auto corners = regular_simplex(k, Real(3), k);
      for (Vertex v = 0; v < n; ++v) {
        for (std::size_t a = 0; a < k; ++a) x.at(v, a) = corners[v % k][a];
        x.at(v, k - 1) += 4 * (v / k);
      }
      return x;
    }
  }
  throw std::invalid_argument("unknown gadget kind");
}

RealRealization realize_lifted(const LiftedGraph& lifted, const Realization& x1) {
  const WeightedGraph& g = lifted.graph;
  const std::size_t dim = g.dimension();
  if (x1.dimension() != 1 || x1.vertex_count() != lifted.base_vertex_count)
    throw RealizationError("base realization does not match the lifted graph");
  RealRealization x(g.vertex_count(), dim);
  const Real scale = to_real(lifted.scale);
  for (Vertex v = 0; v < lifted.base_vertex_count; ++v) x.at(v, lifted.line_axis) = scale * to_real(x1.at(v));

  for (std::size_t c = 0; c < lifted.gadgets.size(); ++c) {
    const GadgetTemplate t = make_gadget(lifted.kinds[c], lifted.parameter);
    const RealRealization y = realize_gadget(t);
    if (y.dimension() != dim) throw RealizationError("gadget dimension does not match the lifted graph");
    const auto& map = lifted.gadgets[c];
    const Vertex t0 = t.terminals[0], t1 = t.terminals[1];
    std::size_t axis = 0;
    for (std::size_t a = 0; a < dim; ++a)
      if (y.at(t1, a) != y.at(t0, a)) axis = a;
    const Real base_span = x.at(map[t1], lifted.line_axis) - x.at(map[t0], lifted.line_axis);
    const Real template_span = y.at(t1, axis) - y.at(t0, axis);
    const bool flip = (base_span < 0) != (template_span < 0);
    for (Vertex i = 0; i < map.size(); ++i) {
      if (i == t0 || i == t1) continue;
      for (std::size_t a = 0; a < dim; ++a) {
        Real d = y.at(i, a) - y.at(t0, a);
        if (a == axis && flip) d = -d;
        const std::size_t target = a == axis ? lifted.line_axis : a == lifted.line_axis ? axis : a;
        x.at(map[i], target) = x.at(map[t0], target) + d;
      }
    }
  }
  return x;
}

std::optional<std::size_t> minimal_embedding_dimension(const std::vector<std::vector<Rational>>& squared) {
  const std::size_t n = squared.size();
  if (n <= 1) return 0;
  // Gram matrix centered at point 0.
  std::vector<std::vector<Rational>> m(n - 1, std::vector<Rational>(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) m[i - 1][j - 1] = (squared[0][i] + squared[0][j] - squared[i][j]) / 2;

  // Symmetric elimination with diagonal pivots; a PSD matrix never needs
  // anything else.
  std::size_t rank = 0;
  std::vector<bool> done(n - 1, false);
  while (true) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n - 1; ++i) {
      if (done[i]) continue;
      if (sgn(m[i][i]) < 0) return std::nullopt;
      if (sgn(m[i][i]) > 0 && !pivot) pivot = i;
    }
    if (!pivot) {
      for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j)
          if (!done[i] && !done[j] && sgn(m[i][j]) != 0) return std::nullopt;
      return rank;
    }
    const std::size_t p = *pivot;
    done[p] = true;
    ++rank;
    for (std::size_t i = 0; i < n - 1; ++i) {
      if (done[i]) continue;
      const Rational f = m[i][p] / m[p][p];
      for (std::size_t j = 0; j < n - 1; ++j)
        if (!done[j]) m[i][j] -= f * m[p][j];
    }
  }
}

std::optional<std::size_t> minimal_embedding_dimension(const WeightedGraph& g) {
  if (!g.is_complete()) throw GraphError("embedding dimension needs a complete graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> sq(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& e : g.edges()) sq[e.u][e.v] = sq[e.v][e.u] = e.weight * e.weight;
  return minimal_embedding_dimension(sq);
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices) {
  WeightedGraph out(0, g.dimension());
  std::vector<std::optional<Vertex>> map(g.vertex_count());
  for (Vertex v : vertices) map.at(v) = out.add_vertex(g.has_name(v) ? g.name(v) : std::string{});
  for (const auto& e : g.edges())
    if (map[e.u] && map[e.v]) out.add_edge(*map[e.u], *map[e.v], e.weight);
  return out;
}

RealRealization rotate(const RealRealization& x, std::size_t a, std::size_t b, const Real& angle) {
  if (a >= x.dimension() || b >= x.dimension() || a == b) throw std::invalid_argument("rotation plane out of range");
  RealRealization y = x;
  const Real c = cos(angle), s = sin(angle);
  for (Vertex v = 0; v < x.vertex_count(); ++v) {
    y.at(v, a) = c * x.at(v, a) - s * x.at(v, b);
    y.at(v, b) = s * x.at(v, a) + c * x.at(v, b);
  }
  return y;
}

FlexibilityDemo clique_flexibility_demo(const WeightedGraph& g1, const Realization& x1, std::size_t k,
                                        const Real& angle) {
  if (k < 3) throw std::invalid_argument("a clique gadget only flexes for K >= 3");
  if (!verify_realization(g1, x1)) throw RealizationError("base realization does not realize the 1D graph");
  FlexibilityDemo demo;
  demo.lifted = lift_clique(g1, k, true);
  if (demo.lifted.gadgets.size() < 2) throw GraphError("flexibility demo needs at least two unit edges");
  demo.first = realize_lifted(demo.lifted, x1);
  demo.second = demo.first;

  // Spin the free corners of the second gadget about the line (axis 0).
  const auto& map = demo.lifted.gadgets[1];
  const Real c = cos(angle), s = sin(angle);
  for (Vertex i = 2; i < map.size(); ++i) {
    const Vertex v = map[i];
    const Real y1 = demo.first.at(v, 1), y2 = demo.first.at(v, 2);
    demo.second.at(v, 1) = c * y1 - s * y2;
    demo.second.at(v, 2) = s * y1 + c * y2;
  }
  demo.first_verifies = verify_realization(demo.lifted.graph, demo.first).ok;
  demo.second_verifies = verify_realization(demo.lifted.graph, demo.second).ok;
  demo.congruent = congruent(demo.first, demo.second);
  return demo;
}

}  // namespace edgp
