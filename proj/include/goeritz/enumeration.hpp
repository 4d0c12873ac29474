#pragma once

#include <vector>

#include "goeritz/sp_element.hpp"

namespace goeritz {

// Enumerates the canonical (omega = +1) elements of B_p with
// kappa <= kappa_max, each exactly once, sorted lexicographically on
// (kappa, k, l, m, n, Delta).
//
// The kappa = 2 shell contains two infinite parabolic families
// ([1 l; 0 1]-types with m = 0 and [1 0; mp 1]-types with l = 0), so a
// finite sweep needs a second bound: axis_bound caps |l| and |m| on those
// two families (and only there; every shell with kappa >= 3 is finite via
// the determinant condition).
std::vector<SpElement> enumerate_image(long p, const Int& kappa_max,
                                       const Int& axis_bound);

}  // namespace goeritz
