#include "paraharm/verdicts.hpp"

#include <algorithm>
#include <cmath>

#include "paraharm/charts.hpp"
#include "paraharm/errors.hpp"
#include "paraharm/sampling.hpp"

namespace paraharm {

std::string_view to_string(Subgroup s) noexcept {
  switch (s) {
    case Subgroup::N: return "N";
    case Subgroup::MN: return "MN";
    case Subgroup::AN: return "AN";
    case Subgroup::P: return "P";
  }
  return "?";
}

std::string_view to_string(Answer a) noexcept { return a == Answer::Equal ? "Equal" : "NotEqual"; }

std::string_view to_string(NormalSubgroup h) noexcept {
  switch (h) {
    case NormalSubgroup::N1: return "N1";
    case NormalSubgroup::N0: return "N0";
    case NormalSubgroup::ZN: return "Z(N)";
    case NormalSubgroup::N: return "N";
  }
  return "?";
}

Subgroup parse_subgroup(std::string_view text) {
  if (text == "N") return Subgroup::N;
  if (text == "MN") return Subgroup::MN;
  if (text == "AN") return Subgroup::AN;
  if (text == "P") return Subgroup::P;
  throw DomainError("unknown subgroup '" + std::string(text) + "' (expected N, MN, AN or P)");
}

namespace {

bool is_unimodular(const FamilySpec& family, Subgroup subgroup) {
  if (family.family == Family::P3x3) {
    const Point x{2.0, 0.0, 0.0, 0.0};
    return std::abs(modular_function(GroupDescriptor::p3x3(), x) - 1.0) < 1e-12;
  }
  const NGroupSpec spec = family.n_spec();
  switch (subgroup) {
    case Subgroup::N: {
      const Point x(spec.dimension(), 0.5);
      return std::abs(modular_function(GroupDescriptor::of(GroupKind::N, spec), x) - 1.0) < 1e-12;
    }
    case Subgroup::MN: {
      // Delta(m n) = |det Ad(m)|^{-1} on N, with M compact.
      Rng rng(7);
      for (int i = 0; i < 4; ++i) {
        if (std::abs(action_determinant(spec, random_ma(rng, spec, 0.0)) - 1.0) > 1e-9) return false;
      }
      return std::abs(modular_function(GroupDescriptor::of(GroupKind::MN, spec), Point(spec.dimension(), 0.5)) - 1.0) <
             1e-12;
    }
    case Subgroup::AN:
    case Subgroup::P: {
      const GroupKind kind = subgroup == Subgroup::AN ? GroupKind::AN : GroupKind::P;
      Point x(1 + spec.dimension(), 0.0);
      x[0] = 2.0;
      return std::abs(modular_function(GroupDescriptor::of(kind, spec), x) - 1.0) < 1e-12;
    }
  }
  return false;
}

ActingGroup acting_group(Subgroup s) {
  switch (s) {
    case Subgroup::N: return ActingGroup::None;
    case Subgroup::MN: return ActingGroup::M;
    case Subgroup::AN: return ActingGroup::A;
    case Subgroup::P: return ActingGroup::MA;
  }
  return ActingGroup::MA;
}

SeriesInfo make_series(std::string label, const OrbitId& orbit, std::vector<NormalSubgroup> trivial_on,
                       bool compact_stabilizer) {
  return {std::move(label), orbit, std::move(trivial_on), compact_stabilizer, orbit_measure_class(orbit)};
}

}  // namespace

GroupMetadata mackey_metadata(const FamilySpec& family, Subgroup subgroup) {
  family.validate();
  GroupMetadata meta;
  meta.family = family;
  meta.subgroup = subgroup;
  if (family.family == Family::P3x3) {
    if (subgroup != Subgroup::P) {
      throw DomainError("P3x3 is only paired with its own subgroup P, got " + std::string(to_string(subgroup)));
    }
    meta.acting = ActingGroup::P0;
    meta.unimodular = is_unimodular(family, subgroup);
    meta.candidates = {{NormalSubgroup::N1, true}, {NormalSubgroup::N0, true}};
    const auto orbit = [&](OrbitType t) { return OrbitId{family, ActingGroup::P0, t}; };
    // Stabilizers in P0: trivial on O1, O2; P1 on O3, O4; P0 on O5.
    meta.series = {make_series("pi1", orbit(OrbitType::O1), {}, true),
                   make_series("pi2", orbit(OrbitType::O2), {}, true),
                   make_series("pi3", orbit(OrbitType::O3), {NormalSubgroup::N1}, false),
                   make_series("pi4", orbit(OrbitType::O4), {NormalSubgroup::N1}, false),
                   make_series("pi5", orbit(OrbitType::O5), {NormalSubgroup::N1, NormalSubgroup::N0}, false)};
    return meta;
  }
  const NGroupSpec spec = family.n_spec();
  meta.acting = acting_group(subgroup);
  meta.unimodular = is_unimodular(family, subgroup);
  meta.candidates = {{NormalSubgroup::ZN, spec.tag != AlgebraTag::Real}, {NormalSubgroup::N, true}};
  const auto orbit = [&](OrbitType t) { return OrbitId{family, meta.acting, t}; };
  // The stabilizer of the trivial character is the whole acting group.
  const bool acting_compact = meta.acting == ActingGroup::None || meta.acting == ActingGroup::M;
  meta.series.push_back(make_series("pi1", orbit(OrbitType::Trivial), {NormalSubgroup::ZN, NormalSubgroup::N},
                                    acting_compact));
  // Stabilizers of nonzero parameters: compact inside M, trivial inside A.
  if (family.is_so21()) {
    meta.series.push_back(make_series("pi2+", orbit(OrbitType::CharacterPositive), {NormalSubgroup::ZN}, true));
    meta.series.push_back(make_series("pi2-", orbit(OrbitType::CharacterNegative), {NormalSubgroup::ZN}, true));
  } else {
    meta.series.push_back(make_series("pi2", orbit(OrbitType::Character), {NormalSubgroup::ZN}, true));
  }
  if (spec.tag == AlgebraTag::Complex) {
    meta.series.push_back(make_series("pi3+", orbit(OrbitType::CentralPositive), {}, true));
    meta.series.push_back(make_series("pi3-", orbit(OrbitType::CentralNegative), {}, true));
  } else if (spec.tag != AlgebraTag::Real) {
    meta.series.push_back(make_series("pi3", orbit(OrbitType::Central), {}, true));
  }
  return meta;
}

bool satisfies_two_conditions(const GroupMetadata& meta, NormalSubgroup h) {
  return std::all_of(meta.series.begin(), meta.series.end(), [&](const SeriesInfo& s) {
    const bool trivial = std::find(s.trivial_on.begin(), s.trivial_on.end(), h) != s.trivial_on.end();
    return trivial || (s.measure.value == Measure::Positive && s.compact_stabilizer);
  });
}

Verdict verdict(const FamilySpec& family, Subgroup subgroup) {
  const GroupMetadata meta = mackey_metadata(family, subgroup);
  Verdict v{family, subgroup, Answer::NotEqual, {}, std::nullopt};

  if (meta.unimodular && meta.connected && meta.noncompact) {
    v.reasons = {"unimodular-connected-noncompact",
                 subgroup == Subgroup::N ? "nilpotent-hence-unimodular" : "modular-function-trivial"};
    return v;
  }

  for (const CandidateInfo& c : meta.candidates) {
    if (!c.noncompact || !satisfies_two_conditions(meta, c.h)) continue;
    v.answer = Answer::Equal;
    v.witness = c.h;
    v.reasons = {"two-conditions-hold", meta.type_i ? "type-I" : "not-type-I",
                 "relative-howe-moore:" + std::string(to_string(c.h)), "split-trivial-on-H-or-subrep-of-regular"};
    if (family.is_so21() && subgroup == Subgroup::AN) v.reasons.push_back("an-coincides-with-p");
    for (const SeriesInfo& s : meta.series) {
      const bool trivial = std::find(s.trivial_on.begin(), s.trivial_on.end(), c.h) != s.trivial_on.end();
      if (trivial) {
        v.reasons.push_back(s.label + ":trivial-on-" + std::string(to_string(c.h)));
      } else {
        v.reasons.push_back(s.label + ":positive-measure-orbit(" + s.measure.reason + "),compact-stabilizer");
      }
    }
    return v;
  }

  const bool all_zero = std::all_of(meta.series.begin(), meta.series.end(),
                                    [](const SeriesInfo& s) { return s.measure.value == Measure::Zero; });
  if (all_zero) {
    v.reasons = {"no-positive-measure-orbit", meta.unimodular ? "unimodular" : "not-unimodular",
                 "regular-representation-has-no-irreducible-subrepresentation"};
    for (const SeriesInfo& s : meta.series) v.reasons.push_back(s.label + ":zero-measure(" + s.measure.reason + ")");
    return v;
  }
  throw UnsupportedError("verdict: no rule decides " + family.name() + " / " + std::string(to_string(subgroup)));
}

NormalSubgroup howe_moore_pair(const FamilySpec& family) {
  const Verdict v = verdict(family, Subgroup::P);
  if (!v.witness) throw UnsupportedError("howe_moore_pair: no non-compact normal subgroup found for " + family.name());
  return *v.witness;
}

}  // namespace paraharm
