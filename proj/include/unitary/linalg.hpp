#pragma once

#include <vector>

#include "unitary/coeff.hpp"

namespace unitary {

struct LinearSolution {
  bool consistent = false;
  std::vector<Coeff> particular;             // one solution, when consistent
  std::vector<std::vector<Coeff>> nullspace; // basis of A x = 0
};

// Exact rational/Gaussian-rational Gauss-Jordan. Rows may be supplied in
// any order; all-zero rows are harmless.
LinearSolution solve_linear(const std::vector<std::vector<Coeff>>& rows,
                            const std::vector<Coeff>& rhs, std::size_t ncols);

// Nullspace basis of the homogeneous system.
std::vector<std::vector<Coeff>> kernel_basis(
    const std::vector<std::vector<Coeff>>& rows, std::size_t ncols);

}  // namespace unitary
