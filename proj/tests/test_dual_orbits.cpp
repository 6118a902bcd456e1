#include <cmath>

#include "doctest.h"
#include "paraharm/dual_orbits.hpp"
#include "paraharm/errors.hpp"
#include "paraharm/representations.hpp"
#include "paraharm/sampling.hpp"
#include "property.hpp"

using namespace paraharm;

namespace {

constexpr AlgebraTag kC = AlgebraTag::Complex;
constexpr AlgebraTag kH = AlgebraTag::Quaternion;

OrbitId orbit(FamilySpec f, OrbitType t) {
  return {f, f.family == Family::P3x3 ? ActingGroup::P0 : ActingGroup::MA, t};
}

// Independent sign-condition classifier for the five P0 orbits.
OrbitType five_orbits(double s, double t) {
  if (s > 0) return OrbitType::O1;
  if (s < 0) return OrbitType::O2;
  if (t > 0) return OrbitType::O3;
  if (t < 0) return OrbitType::O4;
  return OrbitType::O5;
}

std::vector<FamilySpec> rank_one_families() {
  return {make_family(Family::SO0, 2), make_family(Family::SO0, 3), make_family(Family::SO0, 4),
          make_family(Family::SU, 2),  make_family(Family::SU, 3),  make_family(Family::Sp, 2),
          make_family(Family::Sp, 3),  make_family(Family::F4)};
}

DualPoint random_dual_point(Rng& rng, const FamilySpec& f) {
  const NGroupSpec spec = f.n_spec();
  if (spec.tag != AlgebraTag::Real && rng.coin()) return CentralParam{random_unit_imaginary(rng, spec.tag) * rng.uniform(0.2, 3.0)};
  return CharParam{random_vector(rng, spec.tag, spec.w_length())};
}

}  // namespace

TEST_SUITE("dual_orbits") {

TEST_CASE("P0 dual action examples") {
  CHECK(p0_dual_act({1.0, 0.0}, {1.5, -2.0}) == N0Char{1.5, -2.0});
  CHECK(p0_dual_act({2.0, 0.0}, {1.0, 0.0}) == N0Char{0.5, 0.0});
  CHECK(p0_dual_act({1.0, 3.0}, {1.0, 0.0}) == N0Char{1.0, -3.0});
}

TEST_CASE("P0 dual action is the dual of conjugation") {
  prop::for_all(
      "(p.nu)(n) = nu(p^{-1}.n)", 1000, 61,
      [](Rng& rng) {
        return std::tuple{random_p0(rng), N0Char{rng.uniform(-4, 4), rng.uniform(-4, 4)},
                          N0Element{rng.uniform(-4, 4), rng.uniform(-4, 4)}};
      },
      [](const auto& c) {
        const auto& [p, nu, n] = c;
        return std::abs(n0_char_eval(p0_dual_act(p, nu), n) - n0_char_eval(nu, p0_act_n0(p0_inverse(p), n))) < 1e-12;
      });
}

TEST_CASE("five orbits") {
  CHECK(classify_orbit_p0({2.0, 5.0}) == OrbitType::O1);
  CHECK(classify_orbit_p0({-2.0, 5.0}) == OrbitType::O2);
  CHECK(classify_orbit_p0({0.0, 1.0}) == OrbitType::O3);
  CHECK(classify_orbit_p0({0.0, -1.0}) == OrbitType::O4);
  CHECK(classify_orbit_p0({0.0, 0.0}) == OrbitType::O5);
  const FamilySpec p = make_family(Family::P3x3);
  CHECK(std::get<N0Char>(orbit_representative(orbit(p, OrbitType::O3))) == N0Char{0.0, 1.0});
  Rng rng(62);
  for (int k = 0; k < 10000; ++k) {
    const double s = rng.coin() ? rng.uniform(-10, 10) : 0.0;
    const double t = rng.coin() ? rng.uniform(-10, 10) : 0.0;
    const OrbitType o = classify_orbit_p0({s, t});
    CHECK(o == five_orbits(s, t));
    CHECK(classify_orbit_p0(p0_dual_act(random_p0(rng), {s, t})) == o);
  }
}

TEST_CASE("P0 witnesses and stabilizers") {
  Rng rng(63);
  for (int k = 0; k < 500; ++k) {
    const N0Char nu{rng.coin() ? rng.uniform(-5, 5) : 0.0, rng.uniform(-5, 5)};
    const P0Element p = p0_transitivity_witness(nu);
    const N0Char rep = std::get<N0Char>(orbit_representative(orbit(make_family(Family::P3x3), classify_orbit_p0(nu))));
    const N0Char got = p0_dual_act(p, rep);
    CHECK(std::abs(got.s - nu.s) < 1e-10);
    CHECK(std::abs(got.t - nu.t) < 1e-10);
    const P0Element h = random_p0_stabilizer_element(rng, nu);
    CHECK(p0_stabilizer_algebraic(h, nu));
    CHECK(p0_stabilizer_fixed_point(h, nu));
    const P0Element g = random_p0(rng);
    CHECK(p0_stabilizer_algebraic(g, nu) == p0_stabilizer_fixed_point(g, nu));
  }
  // nu = (0, 1): the stabilizer is P1 = {lambda = 1}
  CHECK(p0_stabilizer_algebraic({1.0, 7.0}, {0.0, 1.0}));
  CHECK_FALSE(p0_stabilizer_algebraic({2.0, 0.0}, {0.0, 1.0}));
  CHECK(p0_stabilizer_algebraic({3.0, -2.0}, {0.0, 0.0}));
  CHECK_THROWS_AS(p0_transitivity_witness({1.0, 0.0}, N0Char{-1.0, 0.0}), OrbitError);
}

TEST_CASE("representatives") {
  const FamilySpec so3 = make_family(Family::SO0, 3);
  const CharParam v = std::get<CharParam>(orbit_representative(orbit(so3, OrbitType::Character)));
  CHECK(v.v[0] == AlgebraElement::one(AlgebraTag::Real));
  CHECK(v.v[1] == AlgebraElement(AlgebraTag::Real));
  const FamilySpec su = make_family(Family::SU, 2);
  CHECK(std::get<CentralParam>(orbit_representative(orbit(su, OrbitType::CentralPositive))).m == AlgebraElement::basis(kC, 1));
  CHECK(std::get<CentralParam>(orbit_representative(orbit(su, OrbitType::CentralNegative))).m == -AlgebraElement::basis(kC, 1));
  CHECK_THROWS_AS(orbit_representative(orbit(su, OrbitType::Central)), DomainError);
  CHECK_THROWS_AS(orbit_representative(orbit(make_family(Family::SO0, 2), OrbitType::Character)), DomainError);
  for (const char* label : {"O1", "O5", "trivial", "char", "char+", "char-", "central", "central+", "central-"}) {
    CHECK(OrbitId{so3, ActingGroup::MA, parse_orbit_label(label)}.label() == label);
  }
}

TEST_CASE("dual action examples") {
  const NGroupSpec spec{kC, 3};
  Rng rng(64);
  const CharParam v{random_vector(rng, kC, 2)};
  CHECK(distance(dual_char_act(ma_identity(spec), v).v, v.v) == 0.0);
  MAElement two = ma_identity(spec);
  two.alpha = 2.0;
  CHECK(distance(dual_char_act(two, v).v, v.v * 0.5) < 1e-15);

  const CentralParam i{AlgebraElement::basis(kC, 1)};
  CHECK(dual_central_act(ma_identity(spec), i).m == i.m);
  CHECK(distance(dual_central_act(two, i).m, i.m * 0.25) < 1e-15);

  MAElement j = ma_identity({kH, 2});
  j.beta = AlgebraElement::basis(kH, 2);
  const CentralParam qi{AlgebraElement::basis(kH, 1)};
  // j i j^{-1} = -i
  CHECK(distance(dual_central_act(j, qi).m, -qi.m) < 1e-15);
}

TEST_CASE("characters: chi_{g.v}(x) = chi_v(g^{-1}.x)") {
  for (AlgebraTag tag : {AlgebraTag::Real, kC, kH}) {
    for (int n : {2, 3}) {
      const NGroupSpec spec{tag, n};
      prop::for_all(
          "char duality", 1000, 65 + n,
          [&](Rng& rng) {
            return std::tuple{random_ma(rng, spec), CharParam{random_vector(rng, tag, spec.w_length(), 2.0)},
                              random_n(rng, spec, 2.0)};
          },
          [&](const auto& c) {
            const auto& [g, v, x] = c;
            return std::abs(char_eval(dual_char_act(g, v), x) - char_eval(v, ma_act_n(ma_inverse(g), x))) < 1e-12;
          });
      if (tag == AlgebraTag::Real) continue;
      prop::for_all(
          "central duality", 1000, 67 + n,
          [&](Rng& rng) {
            return std::tuple{random_ma(rng, spec), CentralParam{random_imaginary(rng, tag, 2.0)}, random_imaginary(rng, tag, 2.0)};
          },
          [&](const auto& c) {
            const auto& [g, m, z] = c;
            const AlgebraElement moved = ma_act_n(ma_inverse(g), n_central(spec, z)).z;
            return std::abs(central_phase(dual_central_act(g, m), z) - central_phase(m, moved)) < 1e-12;
          });
    }
  }
}

TEST_CASE("classification is invariant under MA") {
  for (const FamilySpec& f : rank_one_families()) {
    const NGroupSpec spec = f.n_spec();
    Rng rng(70 + static_cast<int>(f.family) * 10 + f.n);
    for (int k = 0; k < 1000; ++k) {
      const DualPoint p = random_dual_point(rng, f);
      const MAElement g = random_ma(rng, spec);
      const DualPoint q = std::holds_alternative<CharParam>(p) ? DualPoint{dual_char_act(g, std::get<CharParam>(p))}
                                                               : DualPoint{dual_central_act(g, std::get<CentralParam>(p))};
      CHECK(classify_orbit(f, q) == classify_orbit(f, p));
    }
  }
  CHECK_THROWS_AS(classify_orbit(make_family(Family::SO0, 3), CentralParam{AlgebraElement(AlgebraTag::Real)}), DomainError);
  CHECK_THROWS_AS(classify_orbit(make_family(Family::SU, 2), CentralParam{AlgebraElement(kC)}), DomainError);
}

TEST_CASE("stabilizer membership: algebraic and fixed-point agree") {
  for (const FamilySpec& f : rank_one_families()) {
    if (f.family == Family::F4) continue;
    const NGroupSpec spec = f.n_spec();
    Rng rng(90 + static_cast<int>(f.family) * 10 + f.n);
    int members = 0;
    for (int k = 0; k < 1000; ++k) {
      const DualPoint p = random_dual_point(rng, f);
      MAElement g;
      switch (k % 3) {
        case 0: g = random_stabilizer_element(rng, f, p); break;
        case 1: g = random_ma(rng, spec, 0.0); break;
        default: g = random_ma(rng, spec, 0.7); break;
      }
      const bool fixed = stabilizer_membership(g, p);
      CHECK(fixed == stabilizer_algebraic(g, p));
      if (k % 3 == 0) CHECK(fixed);
      members += fixed;
    }
    CHECK(members < 1000);
  }
}

TEST_CASE("witness examples") {
  // H, n = 2: v = (2k) from e1 needs alpha = 1/2
  const FamilySpec sp = make_family(Family::Sp, 2);
  const CharParam target{FVector(kH, {AlgebraElement::basis(kH, 3) * 2.0})};
  const MAElement g = transitivity_witness(sp, target);
  CHECK(g.alpha == doctest::Approx(0.5));
  CHECK(is_valid(sp.n_spec(), g));
  const CharParam rep = std::get<CharParam>(orbit_representative(orbit(sp, OrbitType::Character)));
  CHECK(distance(dual_char_act(g, rep).v, target.v) < 1e-10);

  // C central: 5i from i needs alpha = 5^{-1/2}
  const FamilySpec su = make_family(Family::SU, 2);
  const MAElement h = transitivity_witness(su, CentralParam{AlgebraElement::basis(kC, 1) * 5.0});
  CHECK(h.alpha == doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK(distance(dual_central_act(h, CentralParam{AlgebraElement::basis(kC, 1)}).m, AlgebraElement::basis(kC, 1) * 5.0) <
        1e-10);

  // target = representative gives the identity
  const MAElement e = transitivity_witness(sp, rep);
  CHECK(distance(e, ma_identity(sp.n_spec())) < 1e-12);
}

TEST_CASE("witnesses are sound") {
  for (const FamilySpec& f : rank_one_families()) {
    if (f.family == Family::F4) continue;
    const NGroupSpec spec = f.n_spec();
    Rng rng(110 + static_cast<int>(f.family) * 10 + f.n);
    for (int k = 0; k < 300; ++k) {
      const DualPoint p = random_dual_point(rng, f);
      const OrbitType t = classify_orbit(f, p);
      const DualPoint rep = orbit_representative(orbit(f, t));
      const MAElement g = transitivity_witness(f, p);
      CHECK(is_valid(spec, g));
      if (const auto* v = std::get_if<CharParam>(&rep)) {
        CHECK(distance(dual_char_act(g, *v).v, std::get<CharParam>(p).v) < 1e-10);
      } else {
        CHECK(distance(dual_central_act(g, std::get<CentralParam>(rep)).m, std::get<CentralParam>(p).m) < 1e-10);
      }
    }
  }
}

TEST_CASE("cross-orbit witnesses are refused") {
  const FamilySpec so21 = make_family(Family::SO0, 2);
  const CharParam plus{FVector(AlgebraTag::Real, {AlgebraElement::real(AlgebraTag::Real, 2.0)})};
  const CharParam minus{FVector(AlgebraTag::Real, {AlgebraElement::real(AlgebraTag::Real, -3.0)})};
  CHECK(classify_orbit(so21, plus) == OrbitType::CharacterPositive);
  CHECK(classify_orbit(so21, minus) == OrbitType::CharacterNegative);
  CHECK_THROWS_AS(transitivity_witness(so21, minus, DualPoint{plus}), OrbitError);
  CHECK_NOTHROW(transitivity_witness(so21, minus));

  const FamilySpec su = make_family(Family::SU, 3);
  const CentralParam up{AlgebraElement::basis(kC, 1) * 2.0};
  const CentralParam down{AlgebraElement::basis(kC, 1) * -0.5};
  CHECK_THROWS_AS(transitivity_witness(su, down, DualPoint{up}), OrbitError);
  CHECK_THROWS_AS(transitivity_witness(su, up, DualPoint{CharParam{FVector(kC, 2)}}), OrbitError);
}

TEST_CASE("octonions: only the A part is modeled") {
  const FamilySpec f4 = make_family(Family::F4);
  const AlgebraElement e1 = AlgebraElement::basis(AlgebraTag::Octonion, 1);
  const MAElement g = transitivity_witness(f4, CentralParam{e1 * 4.0});
  CHECK(g.alpha == doctest::Approx(0.5));
  CHECK_THROWS_AS(transitivity_witness(f4, CentralParam{AlgebraElement::basis(AlgebraTag::Octonion, 5)}),
                  UnsupportedError);
  CHECK(classify_orbit(f4, CentralParam{AlgebraElement::basis(AlgebraTag::Octonion, 5)}) == OrbitType::Central);
}

}  // TEST_SUITE
