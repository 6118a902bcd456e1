#include "paraharm/families.hpp"

#include "paraharm/errors.hpp"

namespace paraharm {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::P3x3: return "P3x3";
    case Family::SO0: return "SO0";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::F4: return "F4";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "P3x3") return Family::P3x3;
  if (text == "SO0" || text == "SO") return Family::SO0;
  if (text == "SU") return Family::SU;
  if (text == "Sp") return Family::Sp;
  if (text == "F4") return Family::F4;
  throw DomainError("unknown family '" + std::string(text) + "' (expected P3x3, SO0, SU, Sp or F4)");
}

AlgebraTag FamilySpec::algebra() const {
  switch (family) {
    case Family::SO0: return AlgebraTag::Real;
    case Family::SU: return AlgebraTag::Complex;
    case Family::Sp: return AlgebraTag::Quaternion;
    case Family::F4: return AlgebraTag::Octonion;
    case Family::P3x3: break;
  }
  throw UnsupportedError("P3x3 has no division-algebra parameter");
}

NGroupSpec FamilySpec::n_spec() const { return {algebra(), n}; }

void FamilySpec::validate() const {
  switch (family) {
    case Family::P3x3: return;
    case Family::F4:
      if (n != 2) throw DomainError("F4 is only defined with n = 2");
      return;
    default:
      if (n < 2) throw DomainError(std::string(to_string(family)) + "(n,1) needs n >= 2, got " + std::to_string(n));
  }
}

std::string FamilySpec::name() const {
  if (family == Family::P3x3 || family == Family::F4) return std::string(to_string(family));
  return std::string(to_string(family)) + "(" + std::to_string(n) + ",1)";
}

FamilySpec make_family(Family f, int n) {
  FamilySpec spec{f, n};
  if (f == Family::F4) spec.n = 2;
  if (f == Family::P3x3) spec.n = 0;
  spec.validate();
  return spec;
}

}  // namespace paraharm
