#pragma once

#include <vector>

#include "goeritz/matrix.hpp"

namespace goeritz {

// Solution set of an exact integer linear system M g = r (M is 4x4), found
// via Smith normal form.  When consistent, every integer solution is
// particular + integer combinations of the basis vectors.
struct IntegerSolutions {
  bool consistent = false;
  Vec4 particular;
  std::vector<Vec4> basis;  // null lattice basis; empty when zero-dimensional
};

IntegerSolutions solve_integer_system(const Mat4& m, const Vec4& r);

}  // namespace goeritz
