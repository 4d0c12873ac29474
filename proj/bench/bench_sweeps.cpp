// Compares the serial reference kernels against the OpenMP kernels and
// checks that both produce identical reports.

#include <iomanip>
#include <iostream>

#include "goeritz/parallel.hpp"
#include "goeritz/sweeps.hpp"

using namespace goeritz;

namespace {

template <typename Fn>
void run(const std::string& name, Fn&& fn) {
  SweepConfig serial;
  serial.parallel = false;
  SweepConfig parallel;
  parallel.parallel = true;
  VerificationReport rs = fn(serial);
  VerificationReport rp = fn(parallel);
  bool same = rs.canonical_text() == rp.canonical_text();
  std::cout << std::left << std::setw(28) << name << " serial " << std::setw(9)
            << rs.wall_ms << " ms   omp " << std::setw(9) << rp.wall_ms
            << " ms   speedup " << std::fixed << std::setprecision(2)
            << (rp.wall_ms > 0 ? rs.wall_ms / rp.wall_ms : 0.0)
            << (same ? "" : "   REPORTS DIFFER") << std::defaultfloat << "\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << worker_count(true) << "\n";

  run("structure p=2 (10k)", [](SweepConfig cfg) {
    cfg.p = 2;
    cfg.max_word_length = 12;
    cfg.sample_count = 10000;
    return verify_structure(cfg);
  });
  run("structure p=5 (10k)", [](SweepConfig cfg) {
    cfg.p = 5;
    cfg.max_word_length = 12;
    cfg.sample_count = 10000;
    return verify_structure(cfg);
  });
  run("obstruction p=3 (10k)", [](SweepConfig cfg) {
    cfg.p = 3;
    cfg.sample_count = 10000;
    return obstruction_soundness_sweep(cfg);
  });
  run("decision grid p=2 [-2,2]", [](SweepConfig cfg) {
    cfg.p = 2;
    cfg.kappa_max = 8;
    cfg.axis_bound = 8;
    return decision_coherence_grid(cfg, 2);
  });
  run("kernel ball p=5 len 8", [](SweepConfig cfg) {
    cfg.p = 5;
    cfg.max_word_length = 8;
    return verify_kernel(cfg);
  });
  return 0;
}
