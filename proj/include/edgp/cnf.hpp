#pragma once

#include "edgp/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace edgp {

/// Variable index (1-based, as in DIMACS) with a polarity.
struct Literal {
  std::uint32_t var = 0;
  bool negated = false;

  Literal operator~() const { return {var, !negated}; }
  int dimacs() const { return negated ? -static_cast<int>(var) : static_cast<int>(var); }
  static Literal from_dimacs(int lit) {
    return {static_cast<std::uint32_t>(lit < 0 ? -lit : lit), lit < 0};
  }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Total truth assignment over variables 1..n. Ordered lexicographically with
/// s_1 most significant and FALSE < TRUE.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
  Assignment(std::initializer_list<bool> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  bool operator[](std::uint32_t var) const { return values_.at(var - 1); }
  void set(std::uint32_t var, bool value) { values_.at(var - 1) = value; }
  bool satisfies(Literal lit) const { return (*this)[lit.var] != lit.negated; }
  const std::vector<bool>& values() const { return values_; }

  /// "TFT..." style, s_1 first.
  std::string bits() const;

  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

class CnfError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(std::uint32_t variable_count) : variable_count_(variable_count) {}
  CnfFormula(std::uint32_t variable_count, std::vector<Clause> clauses);

  /// DIMACS-style literals, e.g. {{1, -2}, {3}}.
  static CnfFormula from_dimacs_lists(std::uint32_t variable_count,
                                      std::initializer_list<std::initializer_list<int>> clauses);

  std::uint32_t variable_count() const { return variable_count_; }
  std::size_t clause_count() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_.at(i); }

  /// Duplicate literals are kept as written.
  void add_clause(Clause clause);

  bool has_empty_clause() const;
  /// Maximum number of distinct literals over all clauses.
  std::size_t width() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  std::uint32_t variable_count_ = 0;
  std::vector<Clause> clauses_;
};

/// Distinct literals of a clause in order of first occurrence.
Clause distinct_literals(const Clause& clause);

CnfFormula parse_dimacs(std::string_view text);
CnfFormula load_dimacs(const std::string& path);
/// Canonical form: "p cnf n m" then one 0-terminated clause per line.
std::string to_dimacs(const CnfFormula& f);
void save_dimacs(const std::string& path, const CnfFormula& f);

/// Throws CnfError when a is not total on the formula's variables.
bool evaluate(const CnfFormula& f, const Assignment& a);

inline constexpr std::uint32_t kMaxEnumerationVariables = 24;

struct ModelList {
  std::vector<Assignment> models;
  bool truncated = false;
};

/// All satisfying assignments in lexicographic order, at most cap of them.
/// Brute force; refuses formulas with more than kMaxEnumerationVariables.
ModelList enumerate_models(const CnfFormula& f, std::size_t cap = static_cast<std::size_t>(-1));
std::size_t count_models(const CnfFormula& f);

/// Certificate text: one "v<j> <0|1>" line per variable.
std::string format_certificate(const Assignment& a);
Assignment parse_certificate(std::string_view text);

}  // namespace edgp
