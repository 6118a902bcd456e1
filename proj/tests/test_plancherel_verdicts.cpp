#include <cmath>

#include "doctest.h"
#include "paraharm/errors.hpp"
#include "paraharm/sampling.hpp"
#include "paraharm/verdicts.hpp"

using namespace paraharm;

namespace {

constexpr AlgebraTag kC = AlgebraTag::Complex;

struct Row {
  FamilySpec family;
  Subgroup subgroup;
  Answer answer;
};

// The expected table, one row per (family, n, subgroup).
std::vector<Row> expected_table() {
  std::vector<Row> rows{{make_family(Family::P3x3), Subgroup::P, Answer::Equal}};
  const auto add = [&](FamilySpec f) {
    const bool su = f.family == Family::SU;
    const bool so21 = f.is_so21();
    rows.push_back({f, Subgroup::P, Answer::Equal});
    rows.push_back({f, Subgroup::N, Answer::NotEqual});
    rows.push_back({f, Subgroup::MN, Answer::NotEqual});
    rows.push_back({f, Subgroup::AN, su || so21 ? Answer::Equal : Answer::NotEqual});
  };
  for (int n : {2, 3, 4, 5}) add(make_family(Family::SO0, n));
  for (int n : {2, 3, 4}) add(make_family(Family::SU, n));
  for (int n : {2, 3, 4}) add(make_family(Family::Sp, n));
  add(make_family(Family::F4));
  return rows;
}

}  // namespace

TEST_SUITE("plancherel_verdicts") {

TEST_CASE("Plancherel density") {
  const NGroupSpec c2{kC, 2};
  CHECK(plancherel_density(c2, {AlgebraElement::basis(kC, 1)}) == 1.0);
  CHECK(plancherel_mass(c2, 1.0).exact == doctest::Approx(0.5));
  CHECK(plancherel_mass(c2, 1.0).quadrature == doctest::Approx(0.5).epsilon(1e-14));
  for (int n : {2, 3, 4}) {
    for (double m : {1.0, 10.0}) {
      const PlancherelMass r = plancherel_mass({kC, n}, m);
      CHECK(r.exact == doctest::Approx(std::pow(m, n) / n));
      CHECK(std::abs(r.quadrature - r.exact) / r.exact < 1e-8);
      CHECK(r.relative_error < 1e-8);
    }
  }
  Rng rng(151);
  for (int k = 0; k < 100; ++k) {
    const double mu = rng.uniform(0.01, 20.0);
    const NGroupSpec s{kC, rng.integer(2, 5)};
    const double plus = plancherel_density(s, {AlgebraElement(kC, {0.0, mu})});
    CHECK(plus > 0.0);
    CHECK(plus == plancherel_density(s, {AlgebraElement(kC, {0.0, -mu})}));
    CHECK(plus == doctest::Approx(std::pow(mu, s.n - 1)));
  }
  CHECK_THROWS_AS(plancherel_density({AlgebraTag::Quaternion, 2}, {AlgebraElement::basis(AlgebraTag::Quaternion, 1)}),
                  UnsupportedError);
}

TEST_CASE("measure classes") {
  const FamilySpec p = make_family(Family::P3x3);
  const auto p0 = [&](OrbitType t) { return orbit_measure_class({p, ActingGroup::P0, t}).value; };
  CHECK(p0(OrbitType::O1) == Measure::Positive);
  CHECK(p0(OrbitType::O2) == Measure::Positive);
  CHECK(p0(OrbitType::O3) == Measure::Zero);
  CHECK(p0(OrbitType::O4) == Measure::Zero);
  CHECK(p0(OrbitType::O5) == Measure::Zero);
  // half-lines in R^{n-1} are null once n - 1 >= 2
  for (int n : {3, 4, 5}) {
    const MeasureClass m = orbit_measure_class({make_family(Family::SO0, n), ActingGroup::A, OrbitType::Character});
    CHECK(m.value == Measure::Zero);
    CHECK(m.reason.find("half-line") != std::string::npos);
  }
  CHECK(orbit_measure_class({make_family(Family::SO0, 2), ActingGroup::A, OrbitType::CharacterPositive}).value ==
        Measure::Positive);
  CHECK(orbit_measure_class({make_family(Family::SU, 2), ActingGroup::A, OrbitType::CentralPositive}).value ==
        Measure::Positive);
  CHECK(orbit_measure_class({make_family(Family::Sp, 2), ActingGroup::A, OrbitType::Central}).value == Measure::Zero);
  CHECK(orbit_measure_class({make_family(Family::Sp, 2), ActingGroup::MA, OrbitType::Central}).value == Measure::Positive);
  CHECK_THROWS_AS(orbit_measure_class({p, ActingGroup::MA, OrbitType::O1}), DomainError);
}

TEST_CASE("measure classes agree with the classifier on sampled points") {
  Rng rng(152);
  const FamilySpec p = make_family(Family::P3x3);
  for (int k = 0; k < 1000; ++k) {
    const double s = rng.coin() ? rng.uniform(-5, 5) : 0.0;
    const double t = rng.uniform(-5, 5);
    const MeasureClass m = orbit_measure_class({p, ActingGroup::P0, classify_orbit_p0({s, t})});
    CHECK((m.value == Measure::Positive) == (s != 0.0));
  }
}

TEST_CASE("regular representation of the 3x3 group") {
  const Decomposition d = lambda_p_decomposition(make_family(Family::P3x3));
  CHECK(d.multiplicity("pi1").infinite);
  CHECK(d.multiplicity("pi2").infinite);
  CHECK(d.multiplicity("pi1").to_string() == "inf");
  CHECK_FALSE(d.multiplicity("pi5").infinite);
  CHECK(d.multiplicity("pi5").count == 0);
  for (const DecompositionEntry& e : d.entries) {
    const bool present = e.multiplicity.infinite || e.multiplicity.count > 0;
    if (present) {
      CHECK(orbit_measure_class({make_family(Family::P3x3), ActingGroup::P0, e.orbit}).value == Measure::Positive);
    }
  }
  CHECK_THROWS_AS(lambda_p_decomposition(make_family(Family::SU, 2)), UnsupportedError);
}

TEST_CASE("verdict table") {
  for (const Row& row : expected_table()) {
    CAPTURE(row.family.name());
    CAPTURE(to_string(row.subgroup));
    const Verdict v = verdict(row.family, row.subgroup);
    CHECK(v.answer == row.answer);
    REQUIRE_FALSE(v.reasons.empty());
    if (v.answer == Answer::Equal) {
      REQUIRE(v.witness.has_value());
      CHECK(satisfies_two_conditions(mackey_metadata(row.family, row.subgroup), *v.witness));
      CHECK(v.reasons.front() == "two-conditions-hold");
    } else {
      CHECK_FALSE(v.witness.has_value());
    }
  }
  const Verdict so3n = verdict(make_family(Family::SO0, 3), Subgroup::N);
  CHECK(so3n.reasons.front() == "unimodular-connected-noncompact");
  CHECK(verdict(make_family(Family::Sp, 2), Subgroup::P).answer == Answer::Equal);
  CHECK(verdict(make_family(Family::SU, 2), Subgroup::AN).answer == Answer::Equal);
}

TEST_CASE("metadata") {
  for (const Row& row : expected_table()) {
    const GroupMetadata m = mackey_metadata(row.family, row.subgroup);
    CHECK(m.connected);
    CHECK(m.noncompact);
    CHECK(m.unimodular == (row.subgroup == Subgroup::N || row.subgroup == Subgroup::MN));
    CHECK_FALSE(m.series.empty());
  }
  CHECK_THROWS_AS(mackey_metadata(make_family(Family::P3x3), Subgroup::AN), DomainError);
  CHECK_THROWS_AS(make_family(Family::SO0, 1), DomainError);
  CHECK_THROWS_AS(make_family(Family::Sp, 1), DomainError);
}

TEST_CASE("Howe-Moore pairs") {
  CHECK(howe_moore_pair(make_family(Family::P3x3)) == NormalSubgroup::N1);
  for (int n : {2, 3, 4}) CHECK(howe_moore_pair(make_family(Family::SO0, n)) == NormalSubgroup::N);
  CHECK(howe_moore_pair(make_family(Family::SU, 3)) == NormalSubgroup::ZN);
  CHECK(howe_moore_pair(make_family(Family::Sp, 2)) == NormalSubgroup::ZN);
  CHECK(howe_moore_pair(make_family(Family::F4)) == NormalSubgroup::ZN);
  for (FamilySpec f : {make_family(Family::P3x3), make_family(Family::SO0, 4), make_family(Family::SU, 2),
                       make_family(Family::Sp, 3), make_family(Family::F4)}) {
    const NormalSubgroup h = howe_moore_pair(f);
    const GroupMetadata m = mackey_metadata(f, Subgroup::P);
    bool listed = false;
    for (const CandidateInfo& c : m.candidates) {
      if (c.h == h) {
        listed = true;
        CHECK(c.noncompact);
      }
    }
    CHECK(listed);
    CHECK(satisfies_two_conditions(m, h));
  }
}

TEST_CASE("names parse back") {
  for (Subgroup s : {Subgroup::N, Subgroup::MN, Subgroup::AN, Subgroup::P}) CHECK(parse_subgroup(to_string(s)) == s);
  for (Family f : {Family::P3x3, Family::SO0, Family::SU, Family::Sp, Family::F4}) CHECK(parse_family(to_string(f)) == f);
  CHECK_THROWS(parse_subgroup("Q"));
}

}  // TEST_SUITE
