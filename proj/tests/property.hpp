#pragma once

// Minimal property runner: draws `trials` cases from a generator seeded per
// trial and reports the first failing trial with its seed.

#include <cstdint>
#include <sstream>
#include <string>

#include "doctest.h"
#include "paraharm/sampling.hpp"

namespace prop {

inline std::uint64_t trial_seed(std::uint64_t base, int trial) {
  return base * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(trial);
}

/// gen(rng) -> case; check(case) -> true when the property holds.
template <class Gen, class Check>
void for_all(const char* name, int trials, std::uint64_t base, Gen gen, Check check) {
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = trial_seed(base, t);
    paraharm::Rng rng(seed);
    const auto sample = gen(rng);
    if (!check(sample)) {
      std::ostringstream os;
      os << name << ": fails at trial " << t << " (seed " << seed << ")";
      FAIL(os.str());
      return;
    }
  }
  CHECK(true);
}

}  // namespace prop
