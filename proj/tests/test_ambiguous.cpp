#include "edgp/ambiguous_sat.hpp"
#include "edgp/realizer.hpp"

#include <doctest.h>

using namespace edgp;

TEST_CASE("ambiguation examples") {
  auto one = ambiguate_3sat(CnfFormula::from_dimacs_lists(1, {{1}}));
  CHECK(one.formula == CnfFormula::from_dimacs_lists(2, {{-1, 2}, {1, 2}}));
  auto models = enumerate_models(one.formula).models;
  CHECK(models == std::vector<Assignment>{Assignment{false, true}, Assignment{true, true}});
  CHECK(one.designated == Assignment{true, true});

  auto contra = ambiguate_3sat(CnfFormula::from_dimacs_lists(1, {{1}, {-1}}));
  CHECK(contra.formula == CnfFormula::from_dimacs_lists(2, {{-1, 2}, {1, 2}, {1, -2}}));
  CHECK(enumerate_models(contra.formula).models == std::vector<Assignment>{Assignment{true, true}});
  CHECK(evaluate(contra.formula, contra.designated));

  CHECK_THROWS_AS(ambiguate_3sat(CnfFormula::from_dimacs_lists(4, {{1, 2, 3, 4}})), CnfError);
}

TEST_CASE("desugaring forces q") {
  auto psi = CnfFormula::from_dimacs_lists(4, {{1, 2, 3, 4}});
  auto d = desugar_4sat(psi);
  CHECK(d.formula.variable_count() == 5);
  CHECK(d.formula.clause_count() == 5);
  CHECK(d.formula.width() == 3);
  CHECK(d.witness.forward(Assignment{false, false, true, true})[5]);
  CHECK_FALSE(d.witness.forward(Assignment{true, false, false, false})[5]);
  CHECK(d.witness.backward(d.witness.forward(Assignment{true, false, false, false})) ==
        Assignment{true, false, false, false});

  auto check = check_certificate_bijection(psi, d);
  CHECK(check.ok);
  CHECK(check.source_models == 15);
  CHECK(check.target_models == 15);

  auto pair = CnfFormula::from_dimacs_lists(8, {{1, 2, 3, 4}, {5, -6, 7, -8}});
  auto both = check_certificate_bijection(pair, desugar_4sat(pair));
  CHECK(both.ok);
  CHECK(both.source_models == 225);

  auto unsat = CnfFormula::from_dimacs_lists(4, {{1, 2, 3, 4}, {-1}, {-2}, {-3}, {-4}});
  auto none = check_certificate_bijection(unsat, desugar_4sat(unsat));
  CHECK(none.ok);
  CHECK(none.source_models == 0);
  CHECK(none.target_models == 0);

  auto narrow = CnfFormula::from_dimacs_lists(3, {{1, 2, 3}, {-1}});
  CHECK(desugar_4sat(narrow).formula == narrow);
  CHECK_THROWS_AS(desugar_4sat(CnfFormula::from_dimacs_lists(5, {{1, 2, 3, 4, 5}})), CnfError);
}

TEST_CASE("pipeline examples") {
  auto yes = ambiguous_pipeline(CnfFormula::from_dimacs_lists(1, {{1}}));
  CHECK(verify_realization(yes.compiled.graph, yes.designated).ok);
  CHECK(bp_enumerate(yes.compiled.graph).realizations.size() >= 2);
  CHECK(decide_ambiguous(yes.compiled.graph, yes.designated).ambiguous);

  auto no = ambiguous_pipeline(CnfFormula::from_dimacs_lists(1, {{1}, {-1}}));
  CHECK(verify_realization(no.compiled.graph, no.designated).ok);
  CHECK(bp_enumerate(no.compiled.graph).realizations.size() == 1);
  CHECK_FALSE(decide_ambiguous(no.compiled.graph, no.designated).ambiguous);
}
