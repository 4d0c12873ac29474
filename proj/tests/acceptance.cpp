// Acceptance suite: exhaustive and randomized sweeps at fixed bounds, one
// pass/fail line per criterion.  All equalities are exact; there are no
// tolerances anywhere.

#include <iostream>
#include <vector>

#include "goeritz/enumeration.hpp"
#include "goeritz/obstruction.hpp"
#include "goeritz/star_map.hpp"
#include "goeritz/sweeps.hpp"
#include "goeritz/synthesis.hpp"

using namespace goeritz;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail,
            double ms) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << " (" << static_cast<long>(ms) << " ms)" << std::endl;
  if (!pass) ++failures;
}

void criterion_relations() {
  bool pass = true;
  std::string detail;
  double ms = 0;
  for (long p : {2L, 3L, 4L, 5L, 7L}) {
    VerificationReport r = verify_relations(p);
    ms += r.wall_ms;
    if (!r.pass && pass) {
      pass = false;
      detail = r.canonical_text();
    }
  }
  report(1, "defining relations map to the identity (p in {2,3,4,5,7})", pass,
         detail, ms);
}

void criterion_structure() {
  bool pass = true;
  std::string detail;
  double ms = 0;
  for (long p : {2L, 3L, 5L}) {
    SweepConfig cfg;
    cfg.p = p;
    cfg.max_word_length = 12;
    cfg.sample_count = 10000;
    cfg.seed = 20240901;
    VerificationReport r = verify_structure(cfg);
    ms += r.wall_ms;
    if (!r.pass && pass) {
      pass = false;
      detail = r.canonical_text();
    }
  }
  report(2, "10k random words decompose; round-trips and cocycle exact", pass,
         detail, ms);
}

void criterion_kernel() {
  bool pass = true;
  std::string detail;
  double ms = 0;
  for (long p : {2L, 3L, 5L}) {
    SweepConfig cfg;
    cfg.p = p;
    cfg.max_word_length = 8;
    VerificationReport r = verify_kernel(cfg);
    ms += r.wall_ms;
    if (!r.pass && pass) {
      pass = false;
      detail = r.canonical_text();
    }
  }
  report(3, "exhaustive ball (len <= 8): star trivial iff quotient trivial", pass,
         detail, ms);
}

void criterion_image() {
  bool pass = true;
  std::string detail;
  double ms = 0;
  for (long p : {2L, 3L, 4L}) {
    SweepConfig cfg;
    cfg.p = p;
    cfg.kappa_max = 10;
    cfg.axis_bound = 10;
    cfg.max_word_length = 8;
    VerificationReport r = verify_image(cfg);
    ms += r.wall_ms;
    if (!r.pass && pass) {
      pass = false;
      detail = r.canonical_text();
    }
  }
  {
    SweepConfig cfg;
    cfg.p = 5;
    cfg.kappa_max = 12;
    cfg.axis_bound = 12;
    cfg.max_word_length = 10;
    VerificationReport r = verify_image(cfg);
    ms += r.wall_ms;
    if (!r.pass && pass) {
      pass = false;
      detail = r.canonical_text();
    }
    // The excluded witness: in S_5, fails both inequalities, certified
    // non-member (det 1, 25 > 22, 35 > 32).
    SpElement witness{1, 2, 7, 5, 3, 1, 5};
    bool witness_ok = witness.determinant_condition_holds() && !in_B_p(witness) &&
                      abs_val(witness.m * 5) > 2 * abs_val(witness.k * 5 + 1) &&
                      Int(5) * abs_val(witness.ell) > 2 * abs_val(witness.n * 5 + 1);
    if (!witness_ok && pass) {
      pass = false;
      detail = "witness certification failed";
    }
  }
  report(4, "kappa-descent synthesizes the whole image; B_5 witness excluded", pass,
         detail, ms);
}

void criterion_claims() {
  bool pass = true;
  std::string detail;
  double ms = 0;
  for (long p : {2L, 3L, 4L, 5L, 7L}) {
    SweepConfig cfg;
    cfg.p = p;
    cfg.max_word_length = 8;
    cfg.sample_count = 10000;
    cfg.seed = 777;
    for (const VerificationReport& r : verify_claims(cfg)) {
      ms += r.wall_ms;
      if (!r.pass && pass) {
        pass = false;
        detail = r.canonical_text();
      }
    }
  }
  report(5, "sign-block, exclusion, interval and ping-pong claims", pass, detail, ms);
}

void criterion_obstruction_soundness() {
  bool pass = true;
  std::string detail;
  double ms = 0;
  for (long p : {2L, 3L, 5L}) {
    SweepConfig cfg;
    cfg.p = p;
    cfg.sample_count = 10000;
    cfg.seed = 99;
    VerificationReport r = obstruction_soundness_sweep(cfg);
    ms += r.wall_ms;
    if (!r.pass && pass) {
      pass = false;
      detail = r.canonical_text();
    }
  }
  report(6, "10k realized pairs pass all applicable conditions per p", pass, detail,
         ms);
}

void criterion_decision_grid() {
  bool pass = true;
  std::string detail;
  double ms = 0;
  for (long p : {2L, 3L}) {
    SweepConfig cfg;
    cfg.p = p;
    cfg.kappa_max = 8;
    cfg.axis_bound = 8;
    cfg.search_bound = 8;
    VerificationReport r = decision_coherence_grid(cfg, 3);
    ms += r.wall_ms;
    if (!r.pass && pass) {
      pass = false;
      detail = r.canonical_text();
    }
  }
  report(7, "solver agrees with brute force on the [-3,3] grid (p in {2,3})", pass,
         detail, ms);
}

void criterion_homotopy() {
  SweepConfig cfg;
  cfg.sample_count = 1000;
  cfg.seed = 2718;
  VerificationReport r = homotopy_sweep(cfg);
  report(8, "1k conjugate pairs true, 1k certified non-conjugate pairs false",
         r.pass, r.pass ? "" : r.canonical_text(), r.wall_ms);
}

}  // namespace

int main() {
  criterion_relations();
  criterion_structure();
  criterion_kernel();
  criterion_image();
  criterion_claims();
  criterion_obstruction_soundness();
  criterion_decision_grid();
  criterion_homotopy();
  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " acceptance criteria FAILED" << std::endl;
  return 1;
}
