#pragma once

#include <string>
#include <vector>

#include "goeritz/ints.hpp"

namespace goeritz {

// Abstract generators of the genus-2 Goeritz group of L(p,1).  Which ones
// exist depends on p: rho only for p = 2, delta only for p = 3, sigma for
// p >= 4, alpha for p >= 3, and beta, gamma always.
enum class Gen : unsigned char { Alpha, Beta, Gamma, Delta, Rho, Sigma };

bool generator_valid(Gen g, long p);
char generator_token(Gen g);          // a b g d r s
const char* generator_name(Gen g);    // "alpha" ...
Gen generator_from_token(char c);     // throws on unknown token

struct Letter {
  Gen gen;
  long long exp;  // nonzero

  bool operator==(const Letter&) const = default;
};

// A word in the generators, run-length merged (adjacent letters carry
// distinct symbols, exponents are nonzero).  No relation is ever applied
// here; exponents are arbitrary integers.
class GroupWord {
 public:
  explicit GroupWord(long p);
  GroupWord(long p, std::vector<Letter> letters);  // merges on construction

  long p() const { return p_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  void append(Gen g, long long exp);

  bool operator==(const GroupWord& o) const = default;

  std::string to_text() const;  // "b g r^2"; empty word prints as "1"

 private:
  long p_;
  std::vector<Letter> letters_;
};

// Word grammar: whitespace-separated tokens a b g d r s, each with an
// optional ^<int> exponent (negative allowed).  Empty text is the identity.
GroupWord parse_word(const std::string& text, long p);

GroupWord multiply(const GroupWord& u, const GroupWord& v);
GroupWord invert(const GroupWord& u);

}  // namespace goeritz
