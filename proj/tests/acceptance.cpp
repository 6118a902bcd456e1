// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <cstdio>
#include <cstdlib>

#include "paraharm/checks.hpp"
#include "paraharm/sampling.hpp"

int main() {
  const std::uint64_t seed = paraharm::seed_from_environment().value_or(paraharm::kDefaultSeed);
  int failed = 0;
  double total = 0.0;
  for (int id = 1; id <= paraharm::checks::kCheckCount; ++id) {
    const auto r = paraharm::checks::run_check(id, seed);
    total += r.seconds;
    if (!r.pass) ++failed;
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed, seed %llu, %.1f s\n", paraharm::checks::kCheckCount - failed,
              paraharm::checks::kCheckCount, static_cast<unsigned long long>(seed), total);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
