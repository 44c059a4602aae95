#pragma once

#include <functional>

namespace edgp {

/// Certificate translation attached to a reduction. Both directions are total
/// on valid certificates and backward(forward(c)) == c.
template <class Source, class Target>
struct ReductionWitness {
  std::function<Target(const Source&)> forward;
  std::function<Source(const Target&)> backward;
};

}  // namespace edgp
