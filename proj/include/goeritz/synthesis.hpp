#pragma once

#include "goeritz/sp_element.hpp"
#include "goeritz/words.hpp"

namespace goeritz {

// Produces a word w with star(w) = assemble(e), by descent on
// kappa = |kp+1| + |np+Delta|: while kappa > 2, left-multiply the A block by
// [1 +-1; 0 1] when |mp| < 2|kp+1| applies (preferred), otherwise by
// [1 0; +-p 1], choosing the sign that strictly decreases kappa.  At
// kappa = 2 the base words are (beta gamma)^l, the p-specific
// [1 0; p 1]-word to the m-th power, sign adjustments via beta, and -I via
// alpha (p >= 3) or rho^2 (p = 2).
//
// Requires in_B_p(e); for p <= 4 that is automatic.  Since q is injective
// on S_p, matching the signed 2x2 block is enough to match the whole
// matrix; the result is verified by evaluation before returning.
GroupWord synthesize_word(const SpElement& e);

}  // namespace goeritz
