#pragma once

// Ambiguous satisfiability: given a formula and one model, is there another?

#include "edgp/cnf.hpp"
#include "edgp/realization.hpp"
#include "edgp/sat_reductions.hpp"
#include "edgp/witness.hpp"

namespace edgp {

struct AmbiguousInstance {
  CnfFormula formula;
  Assignment designated;  // always satisfies formula
};

/// For phi over s_1..s_n with clauses c_1..c_m builds
///   psi = AND_j (not t or s_j)  AND  AND_i (t or c_i)
/// over t = variable 1 and s_j = variable j + 1, with the designated model
/// t = s_j = TRUE. psi has a second model iff phi is satisfiable.
/// Throws CnfError when phi has a clause with more than three literals.
AmbiguousInstance ambiguate_3sat(const CnfFormula& phi);

struct DesugaredFormula {
  CnfFormula formula;
  ReductionWitness<Assignment, Assignment> witness;  // models of psi <-> models of formula
};

/// Rewrites every clause with four distinct literals l1 v l2 v l3 v l4 into
///   (l1 v l2 v q) (l3 v ~l4 v q) (~l3 v l4 v q) (~l3 v ~l4 v q) (l3 v l4 v ~q)
/// with q = n + i for the i-th such clause. q is forced to (l3 or l4), so
/// models correspond one to one. Narrower clauses pass through unchanged.
DesugaredFormula desugar_4sat(const CnfFormula& psi);

inline constexpr std::uint32_t kMaxBijectionVariables = 12;

struct BijectionCheck {
  bool ok = false;
  std::size_t source_models = 0;
  std::size_t target_models = 0;
};

/// Enumerates both model sets and checks that forward is injective into the
/// target models, backward inverts it and the counts agree. Throws when
/// either formula has more than kMaxBijectionVariables variables.
BijectionCheck check_certificate_bijection(const CnfFormula& psi, const DesugaredFormula& d);

struct AmbiguousPipeline {
  AmbiguousInstance ambiguous;
  DesugaredFormula desugared;
  CompiledSatGraph compiled;
  Assignment designated_certificate;  // designated model extended with q values
  Realization designated;             // its realization
};

/// ambiguate_3sat, desugar_4sat and compile_3sat chained, with the designated
/// model pushed through both forward witnesses.
AmbiguousPipeline ambiguous_pipeline(const CnfFormula& phi);

}  // namespace edgp
