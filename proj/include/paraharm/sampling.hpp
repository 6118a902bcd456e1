#pragma once

// Seeded random generation of algebra and group elements. All randomness in
// the library goes through Rng.

#include <cstdint>
#include <optional>
#include <random>

#include "paraharm/charts.hpp"
#include "paraharm/dual_orbits.hpp"
#include "paraharm/parabolic.hpp"

namespace paraharm {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::mt19937_64& engine() noexcept { return engine_; }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  /// k / 2^bits with |k| <= range * 2^bits.
  double dyadic(int bits, double range);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// PARAHARM_SEED if set and parseable, else nullopt.
std::optional<std::uint64_t> seed_from_environment();

AlgebraElement random_element(Rng& rng, AlgebraTag tag, double scale = 1.0);
AlgebraElement random_unit(Rng& rng, AlgebraTag tag);
AlgebraElement random_imaginary(Rng& rng, AlgebraTag tag, double scale = 1.0);
/// Nonzero imaginary of norm 1; throws DomainError for R.
AlgebraElement random_unit_imaginary(Rng& rng, AlgebraTag tag);
FVector random_vector(Rng& rng, AlgebraTag tag, std::size_t k, double scale = 1.0);
FVector random_unit_vector(Rng& rng, AlgebraTag tag, std::size_t k);
FMatrix random_unitary(Rng& rng, AlgebraTag tag, std::size_t k);

/// Random element of MA obeying the group's constraints, alpha log-uniform in
/// [exp(-log_alpha), exp(log_alpha)]. log_alpha = 0 samples M.
MAElement random_ma(Rng& rng, const NGroupSpec& spec, double log_alpha = 1.0);
NElement random_n(Rng& rng, const NGroupSpec& spec, double scale = 1.0);
/// Entries k / 2^bits; products stay exact in double arithmetic.
NElement random_dyadic_n(Rng& rng, const NGroupSpec& spec, int bits = 4, double range = 4.0);
SemidirectElement random_semidirect(Rng& rng, const NGroupSpec& spec, double scale = 1.0, double log_alpha = 1.0);
PMatrixElement random_p(Rng& rng, double scale = 2.0, double log_lambda = 1.0);
PMatrixElement random_dyadic_p(Rng& rng, int bits = 4, double range = 4.0);
P0Element random_p0(Rng& rng, double scale = 2.0, double log_lambda = 1.0);
AxBElement random_axb(Rng& rng, double scale = 2.0, double log_a = 1.0);
/// A random chart point, positive coordinates log-uniform.
Point random_point(Rng& rng, const GroupChart& chart, double scale = 1.0);

/// Random element of the MA-stabilizer of p: a random element fixing the
/// orbit representative, conjugated by a transitivity witness. May throw
/// UnsupportedError where the witness does (O, off the representative ray).
MAElement random_stabilizer_element(Rng& rng, const FamilySpec& family, const DualPoint& p);
/// Random element of the P0-stabilizer of nu.
P0Element random_p0_stabilizer_element(Rng& rng, const N0Char& nu);

}  // namespace paraharm
