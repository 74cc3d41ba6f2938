#pragma once

#include <span>
#include <vector>

#include "torikit/lattice.hpp"

namespace torikit::detail {

struct ConeGenerators {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

// Generators of {x in Q^rank : <a, x> >= 0 for every a in inequalities},
// by the double description method with incremental insertion in the given
// order. Rays are extremal (irredundant) modulo the lineality space.
ConeGenerators solve_inequalities(std::size_t rank, std::span<const IntVector> inequalities);

}  // namespace torikit::detail
