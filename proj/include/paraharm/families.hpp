#pragma once

#include <string>
#include <string_view>

#include "paraharm/heisenberg.hpp"

namespace paraharm {

/// The five groups whose parabolic subgroups are modeled: the 3x3 group P
/// and the rank-one families SO0(n,1), SU(n,1), Sp(n,1), F4.
enum class Family { P3x3, SO0, SU, Sp, F4 };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);

struct FamilySpec {
  Family family = Family::SU;
  int n = 2;  // ignored for P3x3; always 2 for F4

  /// R, C, H, O. Throws UnsupportedError for P3x3.
  AlgebraTag algebra() const;
  NGroupSpec n_spec() const;
  bool is_rank_one() const noexcept { return family != Family::P3x3; }
  /// SO0(2,1), where M is trivial and the character action splits by sign.
  bool is_so21() const noexcept { return family == Family::SO0 && n == 2; }
  /// Throws DomainError when n is outside the family's range.
  void validate() const;
  /// e.g. "SU(3,1)", "F4", "P3x3".
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Normalizes n (F4 -> 2, P3x3 -> 0) and validates.
FamilySpec make_family(Family f, int n = 2);

}  // namespace paraharm
