#pragma once

// Invariant checks over every module, run by `prc verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace prc {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  int samples = 200;           // random samples per sampled check
  int region_samples = 40;     // points per side for the region cross-check
  std::uint64_t seed = 20240611;
  std::string data_dir;        // registry location; default_data_dir() when empty
};

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& opt);

}  // namespace prc
