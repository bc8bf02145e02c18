#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace w2line {

struct PropertyResult {
  std::string name;
  bool passed;
  double worst;      // largest observed violation measure
  double tolerance;
  std::string detail;
};

// Randomized property batches over every module, deterministic for a seed.
// Independent batches run through the parallel kernels.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed);

}  // namespace w2line
