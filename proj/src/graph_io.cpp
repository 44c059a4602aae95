#include "edgp/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace edgp {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

std::size_t parse_count(const Line& line, const std::string& tok) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size() || v < 0) fail(line, "expected a non-negative integer, got '" + tok + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  }
}

Vertex parse_vertex(const Line& line, const std::string& tok, std::size_t n) {
  std::size_t id = parse_count(line, tok);
  if (id < 1 || id > n) fail(line, "vertex id " + tok + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(id - 1);
}

template <class Scalar, class Parse>
BasicRealization<Scalar> read_realization_impl(std::istream& in, Parse parse) {
  auto lines = tokenize(in);
  if (lines.empty() || lines.front().tokens[0] != "dim" || lines.front().tokens.size() != 2)
    throw ParseError("realization must start with 'dim <K>'");
  std::size_t k = parse_count(lines.front(), lines.front().tokens[1]);
  if (k == 0) fail(lines.front(), "dimension must be positive");

  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows;
  std::size_t max_id = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "x") fail(line, "unknown record '" + line.tokens[0] + "'");
    if (line.tokens.size() != k + 2) fail(line, "expected " + std::to_string(k) + " coordinates");
    std::size_t id = parse_count(line, line.tokens[1]);
    if (id == 0) fail(line, "vertex ids are 1-based");
    std::vector<Scalar> coords;
    try {
      for (std::size_t c = 0; c < k; ++c) coords.push_back(parse(line.tokens[2 + c]));
    } catch (const ParseError& e) {
      fail(line, e.what());
    }
    max_id = std::max(max_id, id);
    rows.emplace_back(id, std::move(coords));
  }
  BasicRealization<Scalar> x(max_id, k);
  std::vector<char> seen(max_id, 0);
  for (auto& [id, coords] : rows) {
    if (seen[id - 1]) throw ParseError("vertex " + std::to_string(id) + " placed twice");
    seen[id - 1] = 1;
    for (std::size_t c = 0; c < k; ++c) x.at(static_cast<Vertex>(id - 1), c) = coords[c];
  }
  for (std::size_t v = 0; v < max_id; ++v)
    if (!seen[v]) throw ParseError("missing position for vertex " + std::to_string(v + 1));
  return x;
}

template <class Scalar, class Format>
void write_realization_impl(std::ostream& out, const BasicRealization<Scalar>& x, Format format) {
  out << "dim " << x.dimension() << '\n';
  for (Vertex v = 0; v < x.vertex_count(); ++v) {
    out << "x " << (v + 1);
    for (std::size_t k = 0; k < x.dimension(); ++k) out << ' ' << format(x.at(v, k));
    out << '\n';
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty() || lines.front().tokens[0] != "n" || lines.front().tokens.size() != 2)
    throw ParseError("graph must start with 'n <vertex_count>'");
  const std::size_t n = parse_count(lines.front(), lines.front().tokens[1]);
  WeightedGraph g(n);

  // dim must be known before anchors are attached.
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].tokens[0] == "dim") {
      if (lines[i].tokens.size() != 2) fail(lines[i], "expected 'dim <K>'");
      std::size_t k = parse_count(lines[i], lines[i].tokens[1]);
      if (k == 0) fail(lines[i], "dimension must be positive");
      g.set_dimension(k);
    }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kind = line.tokens[0];
    try {
      if (kind == "n") {
        fail(line, "duplicate 'n' record");
      } else if (kind == "dim") {
        continue;
      } else if (kind == "e") {
        if (line.tokens.size() != 4) fail(line, "expected 'e <u> <v> <weight>'");
        g.add_edge(parse_vertex(line, line.tokens[1], n), parse_vertex(line, line.tokens[2], n),
                   parse_rational(line.tokens[3]));
      } else if (kind == "a") {
        if (line.tokens.size() != 2 + g.dimension())
          fail(line, "anchor needs " + std::to_string(g.dimension()) + " coordinates");
        std::vector<Rational> pos;
        for (std::size_t c = 2; c < line.tokens.size(); ++c) pos.push_back(parse_rational(line.tokens[c]));
        g.set_anchor(parse_vertex(line, line.tokens[1], n), std::move(pos));
      } else if (kind == "name") {
        if (line.tokens.size() != 3) fail(line, "expected 'name <v> <label>'");
        g.set_name(parse_vertex(line, line.tokens[1], n), line.tokens[2]);
      } else {
        fail(line, "unknown record '" + kind + "'");
      }
    } catch (const GraphError& e) {
      fail(line, e.what());
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(line, e.what());
    }
  }
  return g;
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "n " << g.vertex_count() << '\n';
  if (g.dimension() != 1) out << "dim " << g.dimension() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.has_name(v)) out << "name " << (v + 1) << ' ' << g.name(v) << '\n';
  for (const auto& e : g.edges())
    out << "e " << (e.u + 1) << ' ' << (e.v + 1) << ' ' << format_rational(e.weight) << '\n';
  for (const auto& [v, pos] : g.anchors()) {
    out << "a " << (v + 1);
    for (const auto& c : pos) out << ' ' << format_rational(c);
    out << '\n';
  }
}

Realization read_realization(std::istream& in) {
  return read_realization_impl<Rational>(in, [](const std::string& s) { return parse_rational(s); });
}

RealRealization read_real_realization(std::istream& in) {
  return read_realization_impl<Real>(in, [](const std::string& s) { return parse_real(s); });
}

void write_realization(std::ostream& out, const Realization& x) {
  write_realization_impl(out, x, [](const Rational& q) { return format_rational(q); });
}

void write_realization(std::ostream& out, const RealRealization& x) {
  write_realization_impl(out, x, [](const Real& r) { return format_real(r); });
}

WeightedGraph load_graph(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void save_graph(const std::string& path, const WeightedGraph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

Realization load_realization(const std::string& path) {
  auto in = open_in(path);
  return read_realization(in);
}

RealRealization load_real_realization(const std::string& path) {
  auto in = open_in(path);
  return read_real_realization(in);
}

void save_realization(const std::string& path, const Realization& x) {
  auto out = open_out(path);
  write_realization(out, x);
}

std::string to_text(const WeightedGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::string to_text(const Realization& x) {
  std::ostringstream os;
  write_realization(os, x);
  return os.str();
}

std::string to_text(const RealRealization& x) {
  std::ostringstream os;
  write_realization(os, x);
  return os.str();
}

}  // namespace edgp
