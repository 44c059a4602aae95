#include "edgp/ambiguous_sat.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace edgp {

AmbiguousInstance ambiguate_3sat(const CnfFormula& phi) {
  const std::uint32_t n = phi.variable_count();
  if (phi.width() > 3) throw CnfError("ambiguation expects clauses of at most three literals");
  auto shift = [](Literal l) { return Literal{l.var + 1, l.negated}; };
  const Literal t{1, false};

  CnfFormula psi(n + 1);
  for (std::uint32_t j = 1; j <= n; ++j) psi.add_clause({~t, Literal{j + 1, false}});
  for (const auto& clause : phi.clauses()) {
    Clause c{t};
    for (const auto& lit : clause) c.push_back(shift(lit));
    psi.add_clause(std::move(c));
  }
  return {std::move(psi), Assignment(std::vector<bool>(n + 1, true))};
}

DesugaredFormula desugar_4sat(const CnfFormula& psi) {
  const std::uint32_t n = psi.variable_count();
  if (psi.width() > 4) throw CnfError("desugaring expects clauses of at most four literals");

  struct Fresh {
    std::uint32_t q;
    Literal l3, l4;
  };
  std::vector<Fresh> fresh;
  std::vector<Clause> out;
  for (const auto& clause : psi.clauses()) {
    Clause lits = distinct_literals(clause);
    if (lits.size() < 4) {
      out.push_back(clause);
      continue;
    }
    const Literal q{n + static_cast<std::uint32_t>(fresh.size()) + 1, false};
    const Literal l1 = lits[0], l2 = lits[1], l3 = lits[2], l4 = lits[3];
    out.push_back({l1, l2, q});
    out.push_back({l3, ~l4, q});
    out.push_back({~l3, l4, q});
    out.push_back({~l3, ~l4, q});
    out.push_back({l3, l4, ~q});
    fresh.push_back({q.var, l3, l4});
  }

  const std::uint32_t total = n + static_cast<std::uint32_t>(fresh.size());
  DesugaredFormula d{CnfFormula(total, std::move(out)), {}};
  auto shared = std::make_shared<const std::vector<Fresh>>(std::move(fresh));
  d.witness.forward = [n, total, shared](const Assignment& a) {
    if (a.size() != n) throw CnfError("assignment does not cover the 4SAT variables");
    std::vector<bool> values = a.values();
    values.resize(total);
    for (const auto& f : *shared) values[f.q - 1] = a.satisfies(f.l3) || a.satisfies(f.l4);
    return Assignment(std::move(values));
  };
  d.witness.backward = [n, total](const Assignment& a) {
    if (a.size() != total) throw CnfError("assignment does not cover the 3SAT variables");
    std::vector<bool> values(a.values().begin(), a.values().begin() + n);
    return Assignment(std::move(values));
  };
  return d;
}

BijectionCheck check_certificate_bijection(const CnfFormula& psi, const DesugaredFormula& d) {
  if (psi.variable_count() > kMaxBijectionVariables || d.formula.variable_count() > kMaxBijectionVariables)
    throw std::invalid_argument("bijection check is limited to " + std::to_string(kMaxBijectionVariables) +
                                " variables");
  const auto source = enumerate_models(psi).models;
  const auto target = enumerate_models(d.formula).models;
  BijectionCheck check;
  check.source_models = source.size();
  check.target_models = target.size();
  const std::set<Assignment> target_set(target.begin(), target.end());
  std::set<Assignment> images;
  bool ok = source.size() == target.size();
  for (const auto& m : source) {
    Assignment image = d.witness.forward(m);
    ok = ok && target_set.contains(image) && images.insert(image).second && d.witness.backward(image) == m;
  }
  check.ok = ok;
  return check;
}

AmbiguousPipeline ambiguous_pipeline(const CnfFormula& phi) {
  AmbiguousPipeline p;
  p.ambiguous = ambiguate_3sat(phi);
  p.desugared = desugar_4sat(p.ambiguous.formula);
  p.compiled = compile_3sat(p.desugared.formula);
  p.designated_certificate = p.desugared.witness.forward(p.ambiguous.designated);
  p.designated = p.compiled.witness.forward(p.designated_certificate);
  return p;
}

}  // namespace edgp
