#include "doctest.h"

#include "goeritz/sweeps.hpp"

using namespace goeritz;

namespace {

SweepConfig small_cfg(long p) {
  SweepConfig cfg;
  cfg.p = p;
  cfg.max_word_length = 5;
  cfg.kappa_max = 6;
  cfg.axis_bound = 6;
  cfg.seed = 1234;
  cfg.sample_count = 300;
  cfg.search_bound = 6;
  return cfg;
}

}  // namespace

TEST_CASE("kernel sweep") {
  for (long p : {2L, 3L, 5L}) {
    VerificationReport rep = verify_kernel(small_cfg(p));
    INFO(rep.canonical_text());
    CHECK(rep.pass);
    CHECK(rep.elements_visited > 1);
  }
}

TEST_CASE("image sweep") {
  for (long p : {2L, 3L, 4L, 5L}) {
    VerificationReport rep = verify_image(small_cfg(p));
    INFO(rep.canonical_text());
    CHECK(rep.pass);
  }
}

TEST_CASE("claim sweeps") {
  for (long p : {2L, 3L, 4L, 5L}) {
    SweepConfig cfg = small_cfg(p);
    cfg.max_word_length = 6;
    for (const VerificationReport& rep : verify_claims(cfg)) {
      INFO(rep.canonical_text());
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("structure sweep") {
  for (long p : {2L, 3L, 5L}) {
    SweepConfig cfg = small_cfg(p);
    cfg.max_word_length = 10;
    VerificationReport rep = verify_structure(cfg);
    INFO(rep.canonical_text());
    CHECK(rep.pass);
  }
}

TEST_CASE("obstruction soundness sweep") {
  for (long p : {2L, 3L, 5L}) {
    VerificationReport rep = obstruction_soundness_sweep(small_cfg(p));
    INFO(rep.canonical_text());
    CHECK(rep.pass);
  }
}

TEST_CASE("small decision grid") {
  SweepConfig cfg = small_cfg(2);
  cfg.kappa_max = 6;
  cfg.axis_bound = 6;
  VerificationReport rep = decision_coherence_grid(cfg, 1);
  INFO(rep.canonical_text());
  CHECK(rep.pass);
}

TEST_CASE("homotopy sweep") {
  SweepConfig cfg = small_cfg(2);
  cfg.sample_count = 200;
  VerificationReport rep = homotopy_sweep(cfg);
  INFO(rep.canonical_text());
  CHECK(rep.pass);
}

TEST_CASE("reports are reproducible and mode-independent") {
  for (long p : {2L, 5L}) {
    SweepConfig par = small_cfg(p);
    SweepConfig ser = par;
    ser.parallel = false;
    CHECK(verify_kernel(par).canonical_text() == verify_kernel(ser).canonical_text());
    CHECK(verify_structure(par).canonical_text() ==
          verify_structure(ser).canonical_text());
    CHECK(obstruction_soundness_sweep(par).canonical_text() ==
          obstruction_soundness_sweep(ser).canonical_text());
    CHECK(verify_structure(par).canonical_text() ==
          verify_structure(par).canonical_text());
  }
}
