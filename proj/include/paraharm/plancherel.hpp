#pragma once

#include <string>
#include <vector>

#include "paraharm/dual_orbits.hpp"

namespace paraharm {

/// |m|^{n-1}, the Plancherel density of the Heisenberg group N(C, n) along
/// the central parameter (normalization constant 1). Throws UnsupportedError
/// unless F = C.
double plancherel_density(const NGroupSpec& spec, const CentralParam& m);

struct PlancherelMass {
  double quadrature = 0.0;  // int_0^M m^{n-1} dm by Gauss-Kronrod
  double exact = 0.0;       // M^n / n
  double relative_error = 0.0;
};

PlancherelMass plancherel_mass(const NGroupSpec& spec, double upper);

enum class Measure { Zero, Positive };

struct MeasureClass {
  Measure value = Measure::Zero;
  /// "open-half-plane", "half-line-in-plane", "point", "open-orbit",
  /// "half-line-in-R^k", "open-half-line", "compact-orbit",
  /// "plancherel-null-characters".
  std::string reason;
};

std::string_view to_string(Measure m) noexcept;

/// Plancherel (or Lebesgue, for abelian N) measure class of an orbit of the
/// acting group in the dual of N. Depends only on the OrbitId.
MeasureClass orbit_measure_class(const OrbitId& orbit);

struct Multiplicity {
  bool infinite = false;
  int count = 0;
  std::string to_string() const { return infinite ? "inf" : std::to_string(count); }
};

struct DecompositionEntry {
  std::string series;  // "pi1" ... "pi5"
  OrbitType orbit;
  Multiplicity multiplicity;
};

/// The left regular representation of the 3x3 group: pi1 and pi2 with
/// infinite multiplicity, nothing else.
struct Decomposition {
  std::vector<DecompositionEntry> entries;
  Multiplicity multiplicity(std::string_view series) const;
};

/// Throws UnsupportedError for families other than P3x3.
Decomposition lambda_p_decomposition(const FamilySpec& family);

}  // namespace paraharm
