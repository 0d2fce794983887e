// Times each verification suite with the serial reference loop and with
// the OpenMP loop, and checks that both produce the same report.
//
//   cl12_bench [trials] [seed]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "cl12/verify/suites.hpp"

using cl12::verify::SuiteOptions;
using cl12::verify::SuiteReport;

namespace {

struct Entry {
  const char* name;
  std::function<SuiteReport(const SuiteOptions&)> run;
};

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 200;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;
  if (trials < 1) {
    std::fprintf(stderr, "usage: cl12_bench [trials >= 1] [seed]\n");
    return 2;
  }

  const std::vector<Entry> suites = {
      {"functional_identities", cl12::verify::suite_functional_identities},
      {"representation", cl12::verify::suite_representation},
      {"eigenvalues", cl12::verify::suite_eigenvalues},
      {"mp_inverse", cl12::verify::suite_mp_inverse},
      {"singular_structure", cl12::verify::suite_singular_structure},
      {"solver", cl12::verify::suite_solver},
      {"similarity", cl12::verify::suite_similarity},
      {"conjugation", cl12::verify::suite_conjugation},
  };

  std::printf("threads=%d trials=%d seed=%llu\n", omp_get_max_threads(), trials,
              static_cast<unsigned long long>(seed));
  std::printf("%-22s %10s %10s %8s %s\n", "suite", "serial[s]", "omp[s]", "speedup", "reports");
  bool all_equal = true;
  for (const Entry& e : suites) {
    SuiteReport serial, parallel;
    const double ts = seconds([&] { serial = e.run({trials, seed, false}); });
    const double tp = seconds([&] { parallel = e.run({trials, seed, true}); });
    const bool equal = serial == parallel;
    all_equal = all_equal && equal;
    std::printf("%-22s %10.4f %10.4f %8.2f %s\n", e.name, ts, tp, tp > 0 ? ts / tp : 0.0,
                equal ? "equal" : "DIFFER");
  }
  return all_equal ? 0 : 1;
}
