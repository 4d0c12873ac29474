#pragma once

#include <optional>
#include <string>

#include "goeritz/matrix.hpp"

namespace goeritz {

// Parameterization of the block-upper-triangular group
//
//   S_p = { omega * [ A  eps*D_A ; 0  (A^T)^-1 ] },
//
// where A = [ kp+1  l ; mp  np+Delta ] runs over A_p (det A = Delta = +-1),
// D_A = [ k - Delta*n  Delta*m ; m  0 ], and eps = -1 iff p = 3.
//
// For p = 2 the parameterization is two-to-one: negating A and flipping
// omega yields the same matrix (D_{-A} = -D_A there).  We therefore keep
// omega = +1 as the canonical representative when p = 2; canonicalize()
// enforces this and all producers in this library return canonical
// elements.
struct SpElement {
  int omega = 1;  // +-1
  Int k = 0, ell = 0, m = 0, n = 0;
  int delta = 1;  // +-1
  long p = 2;

  bool operator==(const SpElement& o) const = default;

  static SpElement identity(long p) { return SpElement{1, 0, 0, 0, 0, 1, p}; }

  // knp + Delta*k + n - lm = 0, equivalently det A = Delta.
  bool determinant_condition_holds() const;

  SpElement canonicalize() const;

  std::string to_text() const;
};

bool determinant_condition(const Int& k, const Int& ell, const Int& m, const Int& n,
                           long p, int delta);

Mat2 a_block(const SpElement& e);
Mat2 d_block(const SpElement& e);

// omega * [ A  eps*D_A ; 0  (A^T)^-1 ]; throws if the determinant condition
// fails.
Mat4 assemble(const SpElement& e);

// Unique canonical SpElement with assemble(e) = M, or nullopt if M is not
// in S_p.  For p >= 3 the sign omega is read off the top-left entry mod p;
// for p = 2 both signs match the 2x2 pattern and the canonical omega = +1
// representative is returned (the two parameter tuples assemble to the same
// matrix).
std::optional<SpElement> try_decompose_sp(const Mat4& m, long p);
SpElement decompose_sp(const Mat4& m, long p);  // throws when not in S_p

// Closed-form composition (k3 = k1 k2 p + k1 + k2 + l1 m2, ...); agrees with
// assemble(e1) * assemble(e2).
SpElement compose_sp(const SpElement& e1, const SpElement& e2);

SpElement invert_sp(const SpElement& e);

// Membership of a 2x2 matrix in A_p, absorbing a global sign into omega.
bool in_A_p(const Mat2& a, long p);

// The image inequality: |mp| <= 2|kp+1| or p|l| <= 2|np+Delta|.
bool in_B_p(const SpElement& e);

// kappa = |kp+1| + |np+Delta|, the descent potential; always >= 2.
Int kappa(const SpElement& e);

}  // namespace goeritz
