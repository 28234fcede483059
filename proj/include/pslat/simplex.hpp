#pragma once

#include <optional>
#include <vector>

#include "pslat/rational.hpp"

namespace pslat {

// Exact conic feasibility: nonnegative rational coefficients lambda with
//   sum_i lambda[i] * cols[i] == target,
// or nullopt when no such combination exists. Phase-1 simplex with Bland's
// rule over exact rationals, so termination and the answer are guaranteed.
std::optional<std::vector<Rat>> conic_combination(const std::vector<Ray>& cols,
                                                  const Vec8& target);

bool in_conic_hull(const std::vector<Ray>& cols, const Vec8& target);

}  // namespace pslat
