#include "paraharm/plancherel.hpp"

#include <cmath>

#include "paraharm/errors.hpp"
#include "paraharm/quadrature.hpp"

namespace paraharm {

double plancherel_density(const NGroupSpec& spec, const CentralParam& m) {
  spec.validate();
  if (spec.tag != AlgebraTag::Complex) throw UnsupportedError("plancherel_density is modeled for F = C only");
  if (m.m.tag() != spec.tag || !is_imaginary(m.m)) throw DomainError("plancherel_density: m must lie in Im C");
  const double r = norm(m.m);
  if (r == 0.0) throw DomainError("plancherel_density: m must be nonzero");
  return std::pow(r, spec.n - 1);
}

PlancherelMass plancherel_mass(const NGroupSpec& spec, double upper) {
  spec.validate();
  if (spec.tag != AlgebraTag::Complex) throw UnsupportedError("plancherel_mass is modeled for F = C only");
  if (!(upper > 0.0)) throw DomainError("plancherel_mass: upper limit must be positive");
  const AlgebraTag tag = spec.tag;
  PlancherelMass out;
  out.quadrature = integrate_1d(
      [&](double mu) { return mu == 0.0 ? 0.0 : plancherel_density(spec, {from_complex(tag, {0.0, mu})}); }, 0.0,
      upper, 1e-14);
  out.exact = std::pow(upper, spec.n) / spec.n;
  out.relative_error = std::abs(out.quadrature - out.exact) / out.exact;
  return out;
}

std::string_view to_string(Measure m) noexcept { return m == Measure::Zero ? "Zero" : "Positive"; }

MeasureClass orbit_measure_class(const OrbitId& orbit) {
  const auto zero = [](std::string r) { return MeasureClass{Measure::Zero, std::move(r)}; };
  const auto positive = [](std::string r) { return MeasureClass{Measure::Positive, std::move(r)}; };
  if (orbit.family.family == Family::P3x3) {
    if (orbit.acting != ActingGroup::P0) throw DomainError("P3x3 orbits are P0 orbits");
    switch (orbit.type) {
      case OrbitType::O1:
      case OrbitType::O2: return positive("open-half-plane");
      case OrbitType::O3:
      case OrbitType::O4: return zero("half-line-in-plane");
      case OrbitType::O5: return zero("point");
      default: throw DomainError("orbit " + orbit.label() + " does not belong to P3x3");
    }
  }
  if (orbit.acting == ActingGroup::P0) throw DomainError("P0 acts only in the P3x3 family");
  const NGroupSpec spec = orbit.family.n_spec();
  const bool real = spec.tag == AlgebraTag::Real;
  const bool is_char = orbit.type == OrbitType::Character || orbit.type == OrbitType::CharacterPositive ||
                       orbit.type == OrbitType::CharacterNegative;
  const bool is_central = orbit.type == OrbitType::Central || orbit.type == OrbitType::CentralPositive ||
                          orbit.type == OrbitType::CentralNegative;
  if (orbit.type == OrbitType::Trivial) return zero("point");
  if (!is_char && !is_central) throw DomainError("orbit " + orbit.label() + " does not belong to " + orbit.family.name());
  if (is_central && real) throw DomainError(orbit.family.name() + " has no central parameters");
  // Characters of a non-abelian N form a Plancherel-null set.
  if (is_char && !real) return zero("plancherel-null-characters");
  switch (orbit.acting) {
    case ActingGroup::None: return zero("point");
    case ActingGroup::M: return zero("compact-orbit");
    case ActingGroup::A: {
      const std::size_t ambient = is_char ? spec.w_length() : dimension(spec.tag) - 1;
      if (ambient >= 2) return zero("half-line-in-R^" + std::to_string(ambient));
      return positive("open-half-line");
    }
    case ActingGroup::MA: return positive("open-orbit");
    case ActingGroup::P0: break;
  }
  throw DomainError("orbit_measure_class: unsupported orbit");
}

Multiplicity Decomposition::multiplicity(std::string_view series) const {
  for (const auto& e : entries) {
    if (e.series == series) return e.multiplicity;
  }
  return {};
}

Decomposition lambda_p_decomposition(const FamilySpec& family) {
  if (family.family != Family::P3x3) throw UnsupportedError("lambda_p_decomposition is recorded for P3x3 only");
  return {{{"pi1", OrbitType::O1, {true, 0}},
           {"pi2", OrbitType::O2, {true, 0}},
           {"pi3", OrbitType::O3, {false, 0}},
           {"pi4", OrbitType::O4, {false, 0}},
           {"pi5", OrbitType::O5, {false, 0}}}};
}

}  // namespace paraharm
