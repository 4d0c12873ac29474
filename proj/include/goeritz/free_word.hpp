#pragma once

#include <string>
#include <vector>

#include "goeritz/ints.hpp"

namespace goeritz {

// Word in the rank-2 free group <X, Y>.  Letters are +-1 (X, X^-1) and
// +-2 (Y, Y^-1).  Grammar: x X y Y, uppercase meaning inverse; whitespace
// optional.
struct FreeWord {
  std::vector<int> letters;

  bool operator==(const FreeWord&) const = default;
  std::string to_text() const;
};

FreeWord parse_free_word(const std::string& text);

FreeWord free_reduce(const FreeWord& w);
FreeWord free_invert(const FreeWord& w);

// Freely reduces and strips conjugating prefix/suffix pairs.
FreeWord cyclic_reduce(const FreeWord& w);

// Conjugacy test: after cyclic reduction, u and v must be cyclic rotations
// of one another.  Uses the lexicographically-least rotation as canonical
// form (the test suite checks this against a plain rotation scan).
bool freely_homotopic(const FreeWord& u, const FreeWord& v);

}  // namespace goeritz
