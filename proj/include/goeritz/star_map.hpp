#pragma once

#include "goeritz/matrix.hpp"
#include "goeritz/rational.hpp"
#include "goeritz/words.hpp"

namespace goeritz {

// The homology representation star: G_p -> GL(4, Z) in the ordered basis
// {a, x, b, y}, together with the projection q onto the top-left 2x2 block
// and the Moebius action on the extended real line.

// The matrix a generator induces on H_1(F; Z); sigma's depends on p.
Mat4 generator_matrix(Gen g, long p);

// Product of generator matrices with exact integer exponents.
Mat4 star(const GroupWord& w);

Mat2 q_project(const Mat4& m);

ExtRational mobius_apply(const Mat2& m, const ExtRational& t);

// Closed intervals from the ping-pong argument:
//   I_gamma^- = (-inf, -1/2] u {inf},  I_gamma^+ = [1/2, inf) u {inf},
//   I_sigma^- = [-2/p, 0],             I_sigma^+ = [0, 2/p].
struct IntervalSet {
  bool gamma_minus = false;
  bool gamma_plus = false;
  bool sigma_minus = false;
  bool sigma_plus = false;

  bool operator==(const IntervalSet&) const = default;
  std::string to_text() const;
};

IntervalSet interval_classify(const ExtRational& t, long p);

}  // namespace goeritz
