#pragma once

#include <vector>

#include "dgmf/field.hpp"

namespace dgmf {

// Dense linear system A x = b over a field.
struct LinearSolution {
  bool consistent = false;
  std::vector<Coeff> particular;               // free variables set to zero
  std::vector<std::vector<Coeff>> nullspace;   // one basis vector per free variable
};

LinearSolution solve_linear_system(const Field& F, std::vector<std::vector<Coeff>> A,
                                   std::vector<Coeff> b, std::size_t num_unknowns);

}  // namespace dgmf
