#include "edgp/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace edgp {

std::string Assignment::bits() const {
  std::string s;
  for (bool b : values_) s += b ? 'T' : 'F';
  return s;
}

CnfFormula::CnfFormula(std::uint32_t variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count) {
  for (auto& c : clauses) add_clause(std::move(c));
}

CnfFormula CnfFormula::from_dimacs_lists(std::uint32_t variable_count,
                                         std::initializer_list<std::initializer_list<int>> clauses) {
  CnfFormula f(variable_count);
  for (const auto& c : clauses) {
    Clause clause;
    for (int lit : c) {
      if (lit == 0) throw CnfError("literal 0 is reserved as a terminator");
      clause.push_back(Literal::from_dimacs(lit));
    }
    f.add_clause(std::move(clause));
  }
  return f;
}

void CnfFormula::add_clause(Clause clause) {
  for (const auto& lit : clause)
    if (lit.var < 1 || lit.var > variable_count_)
      throw CnfError("literal " + std::to_string(lit.dimacs()) + " outside variables 1.." +
                     std::to_string(variable_count_));
  clauses_.push_back(std::move(clause));
}

bool CnfFormula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

std::size_t CnfFormula::width() const {
  std::size_t w = 0;
  for (const auto& c : clauses_) w = std::max(w, distinct_literals(c).size());
  return w;
}

Clause distinct_literals(const Clause& clause) {
  Clause out;
  for (const auto& lit : clause)
    if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
  return out;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long long declared_vars = 0;
  long long declared_clauses = 0;
  CnfFormula f;
  Clause current;
  bool open_clause = false;
  bool finished = false;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("dimacs line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok[0] == 'c' && !have_header) continue;
    if (tok == "%") {
      finished = true;
      continue;
    }
    if (tok == "p") {
      if (have_header) fail("duplicate problem line");
      std::string fmt;
      if (!(ls >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" || declared_vars < 0 ||
          declared_clauses < 0)
        fail("malformed header, expected 'p cnf <variables> <clauses>'");
      if (std::string extra; ls >> extra) fail("trailing tokens after header");
      have_header = true;
      f = CnfFormula(static_cast<std::uint32_t>(declared_vars));
      continue;
    }
    if (!have_header) fail("clause data before 'p cnf' header");
    do {
      if (finished) {
        if (tok == "0") continue;
        fail("data after end marker");
      }
      long long lit = 0;
      try {
        std::size_t pos = 0;
        lit = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        fail("not a literal: '" + tok + "'");
      }
      if (lit == 0) {
        if (static_cast<long long>(f.clause_count()) == declared_clauses) fail("more clauses than declared");
        f.add_clause(std::move(current));
        current.clear();
        open_clause = false;
        continue;
      }
      if (std::llabs(lit) > declared_vars)
        fail("literal " + tok + " exceeds declared variable count " + std::to_string(declared_vars));
      current.push_back(Literal::from_dimacs(static_cast<int>(lit)));
      open_clause = true;
    } while (ls >> tok);
  }
  if (!have_header) throw ParseError("dimacs: missing 'p cnf' header");
  if (open_clause) throw ParseError("dimacs: last clause is missing its 0 terminator");
  if (static_cast<long long>(f.clause_count()) != declared_clauses)
    throw ParseError("dimacs: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clause_count()));
  return f;
}

CnfFormula load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dimacs(ss.str());
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.variable_count() << ' ' << f.clause_count() << '\n';
  for (const auto& c : f.clauses()) {
    for (const auto& lit : c) os << lit.dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

void save_dimacs(const std::string& path, const CnfFormula& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_dimacs(f);
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  if (a.size() < f.variable_count())
    throw CnfError("assignment covers " + std::to_string(a.size()) + " of " +
                   std::to_string(f.variable_count()) + " variables");
  for (const auto& c : f.clauses())
    if (std::none_of(c.begin(), c.end(), [&](const Literal& l) { return a.satisfies(l); })) return false;
  return true;
}

ModelList enumerate_models(const CnfFormula& f, std::size_t cap) {
  const std::uint32_t n = f.variable_count();
  if (n > kMaxEnumerationVariables)
    throw CnfError("brute-force enumeration limited to " + std::to_string(kMaxEnumerationVariables) +
                   " variables, formula has " + std::to_string(n));
  ModelList out;
  if (f.has_empty_clause()) return out;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> values(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // s_1 is the most significant bit, so increasing masks are lexicographic.
    for (std::uint32_t j = 0; j < n; ++j) values[j] = (mask >> (n - 1 - j)) & 1;
    Assignment a(values);
    if (!evaluate(f, a)) continue;
    if (out.models.size() == cap) {
      out.truncated = true;
      break;
    }
    out.models.push_back(std::move(a));
  }
  return out;
}

std::size_t count_models(const CnfFormula& f) { return enumerate_models(f).models.size(); }

std::string format_certificate(const Assignment& a) {
  std::ostringstream os;
  for (std::uint32_t j = 1; j <= a.size(); ++j) os << 'v' << j << ' ' << (a[j] ? 1 : 0) << '\n';
  return os.str();
}

Assignment parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::uint32_t, bool>> entries;
  std::string var, val;
  std::uint32_t max_var = 0;
  while (in >> var) {
    if (!(in >> val) || var.size() < 2 || var[0] != 'v' || (val != "0" && val != "1"))
      throw ParseError("certificate lines must read 'v<j> <0|1>'");
    std::uint32_t j = 0;
    try {
      j = static_cast<std::uint32_t>(std::stoul(var.substr(1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad variable '" + var + "'");
    }
    if (j == 0) throw ParseError("variables are 1-based");
    max_var = std::max(max_var, j);
    entries.emplace_back(j, val == "1");
  }
  std::vector<bool> values(max_var);
  std::vector<char> seen(max_var, 0);
  for (auto [j, b] : entries) {
    if (seen[j - 1]) throw ParseError("variable v" + std::to_string(j) + " assigned twice");
    seen[j - 1] = 1;
    values[j - 1] = b;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ParseError("certificate is not total");
  return Assignment(std::move(values));
}

}  // namespace edgp
