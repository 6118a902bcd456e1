#pragma once

// Rule table deciding A(H) = B(H) n C0(H) for the subgroups N, MN, AN, P of
// the rank-one parabolics and for the 3x3 group.

#include <optional>
#include <string>
#include <vector>

#include "paraharm/plancherel.hpp"

namespace paraharm {

enum class Subgroup { N, MN, AN, P };
enum class Answer { Equal, NotEqual };
/// Candidates for the non-compact normal subgroup H of the two-condition rule.
enum class NormalSubgroup { N1, N0, ZN, N };

std::string_view to_string(Subgroup s) noexcept;
std::string_view to_string(Answer a) noexcept;
std::string_view to_string(NormalSubgroup h) noexcept;
Subgroup parse_subgroup(std::string_view text);

/// One Mackey series: the irreducibles attached to one orbit type.
struct SeriesInfo {
  std::string label;  // "pi1".."pi5" for P3x3; "pi1" (trivial on N), "pi2" (characters), "pi3" (central)
  OrbitId orbit;
  std::vector<NormalSubgroup> trivial_on;
  bool compact_stabilizer = false;
  MeasureClass measure;
};

struct CandidateInfo {
  NormalSubgroup h;
  bool noncompact = false;
};

struct GroupMetadata {
  FamilySpec family;
  Subgroup subgroup = Subgroup::P;
  ActingGroup acting = ActingGroup::MA;
  bool connected = true;
  bool noncompact = true;
  bool unimodular = false;  // computed from the modular function
  bool type_i = true;
  std::vector<CandidateInfo> candidates;
  std::vector<SeriesInfo> series;
};

/// Throws DomainError for out-of-range n and for P3x3 with a subgroup other than P.
GroupMetadata mackey_metadata(const FamilySpec& family, Subgroup subgroup);

struct Verdict {
  FamilySpec family;
  Subgroup subgroup = Subgroup::P;
  Answer answer = Answer::NotEqual;
  /// Ordered rule applications; the first entry is the deciding rule.
  std::vector<std::string> reasons;
  /// The H that satisfied the two-condition rule, for Equal answers.
  std::optional<NormalSubgroup> witness;
};

Verdict verdict(const FamilySpec& family, Subgroup subgroup);
/// Every series either trivial on H or attached to a positive-measure orbit
/// with compact stabilizer.
bool satisfies_two_conditions(const GroupMetadata& meta, NormalSubgroup h);
/// The H with the relative Howe-Moore property for P: N1 for P3x3, N for
/// SO0(n,1), Z(N) otherwise.
NormalSubgroup howe_moore_pair(const FamilySpec& family);

}  // namespace paraharm
