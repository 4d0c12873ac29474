#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goeritz/words.hpp"

namespace goeritz {

// Canonical form of the image of a word in G_p' = G_p / <<beta^2>>.
//
// The central part (rho^2 for p = 2, alpha for p >= 3) is stored as a parity
// bit; `core` is the canonical flattened word for the rest:
//   p  = 2: alternating beta / gamma^a rho^b syllables, gamma pushed left of
//           rho (each transposition and each rho^2 folds into the parity),
//   p  = 3: alternating beta / gamma^e delta^f syllables ((e,f) != (0,0)),
//   p >= 4: freely reduced word in the involutions beta, gamma, sigma.
// Words represent equal quotient elements iff their canonical forms agree.
struct NormalForm {
  long p;
  int central_parity;  // 0 or 1
  GroupWord core;

  bool is_trivial() const { return central_parity == 0 && core.empty(); }
  bool operator==(const NormalForm& o) const = default;

  // Lifts the canonical form back to a word ((rho^2)^parity core, resp.
  // alpha^parity core).
  GroupWord realize() const;

  std::string to_text() const;
};

NormalForm normal_form(const GroupWord& w);

// True iff w lies in <<beta^2>>, equivalently star(w) = I.
bool is_trivial_in_quotient(const GroupWord& w);

// Leftmost minimal subword of the reduced form containing gamma or sigma
// (p >= 4 only; alpha and the quotient reduction are applied first).
enum class LLPrefix { None, Gamma, Sigma, BetaGamma, BetaSigma };
LLPrefix ll_prefix(const GroupWord& w);
const char* ll_prefix_name(LLPrefix ll);

// Structured views of the canonical form, for display and for checking the
// shape constraints of the two small-p normal forms.

struct P2Block {
  long long k;  // eta_k = (beta gamma)^(k-1) beta, k >= 1 in the interior
  int eps;      // gamma^eps
};

struct P2Form {
  int omega_hat;               // leading (rho^2)^omega_hat
  int eps_top;                 // gamma^eps right of the central part
  std::vector<P2Block> blocks; // (eta_k gamma^eps rho) factors, leftmost first
  long long k0;                // trailing eta_k0
  int eps0;                    // trailing gamma^eps0
};

P2Form parse_p2_form(const NormalForm& nf);

struct P3Form {
  int alpha;                                      // alpha^eps3
  int beta_left;                                  // eps2
  std::vector<std::pair<int, int>> etas;          // (e_i, f_i), leftmost first
  int beta_right;                                 // eps1
};

P3Form parse_p3_form(const NormalForm& nf);

}  // namespace goeritz
