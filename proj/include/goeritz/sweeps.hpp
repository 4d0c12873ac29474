#pragma once

#include <random>
#include <string>
#include <vector>

#include "goeritz/obstruction.hpp"
#include "goeritz/sp_element.hpp"
#include "goeritz/words.hpp"

namespace goeritz {

// Bounds for the verification sweeps.  Identical configs (seed included)
// produce identical reports, in both the serial and the OpenMP path.
struct SweepConfig {
  long p = 2;
  int max_word_length = 8;
  Int kappa_max = 10;
  Int axis_bound = 10;     // cap for the kappa = 2 parabolic families
  unsigned long long seed = 1;
  int sample_count = 10000;
  Int search_bound = 8;
  bool parallel = true;    // false selects the serial reference kernels
};

struct VerificationReport {
  std::string claim;
  bool pass = true;
  std::string counterexample;  // empty iff pass
  unsigned long long words_visited = 0;
  unsigned long long elements_visited = 0;
  double wall_ms = 0;  // informational; not part of the canonical text

  // Deterministic rendering used for byte-for-byte reproducibility checks.
  std::string canonical_text() const;
  std::string to_text() const;  // canonical text plus timing
};

// Per-sample deterministic RNG so that sharded runs match serial runs.
std::mt19937_64 sample_rng(unsigned long long seed, unsigned long long index);

// Uniform random word: `len` letters over the valid alphabet for p with
// exponents +-1 (run-length merging may shorten it).
GroupWord random_word(long p, int len, std::mt19937_64& rng);

// star evaluates every defining relation of the presentation of G_p to the
// identity matrix.
VerificationReport verify_relations(long p);

// Exhaustive ball of the quotient G_p' up to max_word_length: star must be
// constant along converging paths and trivial exactly on the trivial
// canonical form.
VerificationReport verify_kernel(const SweepConfig& cfg);

// (i) every enumerated element of B_p with kappa <= kappa_max synthesizes to
// a word with the exact star image; (ii) every word in the ball decomposes
// into S_p with the image inequality holding; (iii) for p >= 5 the witness
// [11 7; 25 16]-type excluded matrix is never produced.
VerificationReport verify_image(const SweepConfig& cfg);

// The four matrix-positivity/interval claims plus ping-pong freeness.
std::vector<VerificationReport> verify_claims(const SweepConfig& cfg);

// Random-word sweep: homomorphism, decompose/assemble round-trips, closed
// form composition, and the D-block cocycle identity.
VerificationReport verify_structure(const SweepConfig& cfg);

// Random (v, w) soundness sweep for the necessary conditions: realized pairs
// v' = star(w) v pass every applicable condition, delta is preserved, the
// c,d,e,f identities hold, and some vector family matches.
VerificationReport obstruction_soundness_sweep(const SweepConfig& cfg);

// Exhaustive grid agreement between the linear-system decision procedure and
// brute-force application of the enumerated image.
VerificationReport decision_coherence_grid(const SweepConfig& cfg, long grid_bound);

// Conjugate pairs answer true; pairs certified non-conjugate by the rotation
// oracle answer false.
VerificationReport homotopy_sweep(const SweepConfig& cfg);

}  // namespace goeritz
