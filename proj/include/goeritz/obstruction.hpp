#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "goeritz/rational.hpp"
#include "goeritz/sp_element.hpp"
#include "goeritz/words.hpp"

namespace goeritz {

// Integer homology vector (a, x, b, y) in the ordered basis {a, x, b, y}
// of H_1(F; Z).
struct HomologyVector {
  Int a = 0, x = 0, b = 0, y = 0;

  bool operator==(const HomologyVector&) const = default;

  Vec4 to_vec4() const { return Vec4{{a, x, b, y}}; }
  static HomologyVector from_vec4(const Vec4& v) {
    return HomologyVector{v[0], v[1], v[2], v[3]};
  }

  std::string to_text() const;
};

// Parses "a,x,b,y".
HomologyVector parse_homology_vector(const std::string& text);

Int s_invariant(const HomologyVector& v, long p);       // s = ap + eps*b
Int delta_invariant(const HomologyVector& v, long p);   // delta = bs + xyp

// The quantities s, s', delta, delta' and, when the deltas are nonzero,
// the exact rationals c, d, e, f (and primed versions) for a fixed
// Delta sign.  The c--f numerators are kept as well; the divisibility and
// inequality conditions are phrased on them.
struct DerivedInvariants {
  long p;
  int Delta;
  Int s, s_prime, delta, delta_prime;
  Int num_c, num_d, num_e, num_f;  // Delta*b*x' - b'*x, etc.
  std::optional<Rational> c, d, e, f;
  std::optional<Rational> c_prime, d_prime, e_prime, f_prime;
};

DerivedInvariants derived_invariants(const HomologyVector& v,
                                     const HomologyVector& v_prime, long p,
                                     int Delta);

// One row of the necessary-condition table, for a fixed sign pair.
// cond3/cond4 are empty when delta * delta' = 0 (not applicable).
struct ConditionRow {
  int omega;
  int Delta;
  bool cond1_mod_p = false;       // b' == omega*b  (mod p)
  bool cond2_gcd = false;         // gcd(b, y) == gcd(b', y')
  std::optional<bool> cond3_divisibility;
  std::optional<bool> cond4_inequality;

  bool all_pass() const {
    return cond1_mod_p && cond2_gcd && cond3_divisibility.value_or(true) &&
           cond4_inequality.value_or(true);
  }
};

std::array<ConditionRow, 4> condition_table(const HomologyVector& v,
                                            const HomologyVector& v_prime, long p);

// The seven vector families; nullopt when delta * delta' = 0 (the family
// test presumes both nonzero).
std::optional<std::set<int>> match_vector_families(const HomologyVector& v,
                                                   const HomologyVector& v_prime,
                                                   long p);

// Decision procedure for existence of g in S_p (with the image inequality)
// carrying v to v'.  `exhaustive` is false only when a positive-dimensional
// solution family (possible only for delta = delta' = 0) was scanned up to
// search_bound without success, so absence is then not a proof.
struct GoeritzElementResult {
  std::optional<SpElement> element;
  bool exhaustive = true;
};

GoeritzElementResult find_goeritz_element(const HomologyVector& v,
                                          const HomologyVector& v_prime, long p,
                                          const Int& search_bound);

// Same decision, with a generator word realizing the element.
struct GoeritzSearchResult {
  std::optional<std::pair<SpElement, GroupWord>> found;
  bool exhaustive = true;
};

GoeritzSearchResult find_goeritz_matrix(const HomologyVector& v,
                                        const HomologyVector& v_prime, long p,
                                        const Int& search_bound);

enum class Verdict { CertifiedEquivalentOnHomology, Obstructed, Inconclusive };
const char* verdict_name(Verdict v);

struct ObstructionReport {
  long p;
  HomologyVector v, v_prime;
  std::array<ConditionRow, 4> conditions;
  bool conditions_pass_somewhere = false;
  std::optional<std::set<int>> families;  // nullopt: inconclusive (delta*delta'=0)
  std::optional<std::pair<SpElement, GroupWord>> certificate;
  bool solver_exhaustive = true;
  Verdict verdict = Verdict::Inconclusive;
};

ObstructionReport check_homology_obstruction(const HomologyVector& v,
                                             const HomologyVector& v_prime, long p,
                                             const Int& search_bound);

}  // namespace goeritz
