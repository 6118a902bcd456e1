// Cross-module properties over generated groups, families and dual points.

#include <cmath>
#include <string>

#include "doctest.h"
#include "paraharm/coefficients.hpp"
#include "paraharm/errors.hpp"
#include "paraharm/verdicts.hpp"
#include "property.hpp"

using namespace paraharm;

namespace {

AlgebraTag gen_tag(Rng& rng, bool octonions = true) {
  static constexpr AlgebraTag tags[] = {AlgebraTag::Real, AlgebraTag::Complex, AlgebraTag::Quaternion, AlgebraTag::Octonion};
  return tags[rng.integer(0, octonions ? 3 : 2)];
}

// Descriptors with a chart: P3x3, AXB, N and AN over any algebra.
GroupDescriptor gen_chart_descriptor(Rng& rng) {
  switch (rng.integer(0, 3)) {
    case 0: return GroupDescriptor::p3x3();
    case 1: return GroupDescriptor::axb();
    default: break;
  }
  const AlgebraTag tag = gen_tag(rng);
  const int n = tag == AlgebraTag::Octonion ? 2 : rng.integer(2, 3);
  return {rng.coin() ? GroupKind::N : GroupKind::AN, tag, n};
}

FamilySpec gen_family(Rng& rng) {
  switch (rng.integer(0, 4)) {
    case 0: return make_family(Family::P3x3);
    case 1: return make_family(Family::SO0, rng.integer(2, 6));
    case 2: return make_family(Family::SU, rng.integer(2, 5));
    case 3: return make_family(Family::Sp, rng.integer(2, 4));
    default: return make_family(Family::F4);
  }
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("chart group laws are associative with two-sided inverses") {
  prop::for_all(
      "chart group law", 400, 201,
      [](Rng& rng) {
        const GroupChart chart(gen_chart_descriptor(rng));
        return std::tuple{chart, random_point(rng, chart), random_point(rng, chart), random_point(rng, chart)};
      },
      [](const auto& c) {
        const auto& [chart, a, b, x] = c;
        const double assoc = GroupChart::distance(chart.multiply(chart.multiply(a, b), x), chart.multiply(a, chart.multiply(b, x)));
        const double inv = GroupChart::distance(chart.multiply(chart.inverse(a), a), chart.identity());
        return assoc < 1e-11 && inv < 1e-12;
      });
}

TEST_CASE("left density is invariant and the modular function is a homomorphism") {
  prop::for_all(
      "modular homomorphism", 400, 202,
      [](Rng& rng) {
        const GroupChart chart(gen_chart_descriptor(rng));
        return std::tuple{chart, random_point(rng, chart), random_point(rng, chart)};
      },
      [](const auto& c) {
        const auto& [chart, a, b] = c;
        const double lhs = chart.modular(chart.multiply(a, b));
        return std::abs(lhs - chart.modular(a) * chart.modular(b)) <= 1e-12 * std::max(1.0, lhs) &&
               chart.left_density(a) > 0.0 && chart.right_density(a) > 0.0;
      });
}

TEST_CASE("closed-form regular coefficients are hermitian and peak at the identity") {
  prop::for_all(
      "phi(g^{-1}) = conj phi(g), |phi(g)| <= phi(e)", 300, 203,
      [](Rng& rng) {
        const GroupChart chart(gen_chart_descriptor(rng));
        return std::tuple{chart, random_point(rng, chart, 2.0)};
      },
      [](const auto& c) {
        const auto& [chart, g] = c;
        const CoefficientFn phi = default_regular_coefficient(chart);
        const double e = phi(chart.identity()).real();
        return std::abs(phi(chart.inverse(g)) - std::conj(phi(g))) <= 1e-10 * e && std::abs(phi(g)) <= e * (1 + 1e-12);
      });
}

TEST_CASE("every family and subgroup gets an answer") {
  prop::for_all(
      "verdict completeness", 300, 204,
      [](Rng& rng) {
        static constexpr Subgroup subs[] = {Subgroup::N, Subgroup::MN, Subgroup::AN, Subgroup::P};
        return std::pair{gen_family(rng), subs[rng.integer(0, 3)]};
      },
      [](const auto& c) {
        const auto& [f, s] = c;
        if (f.family == Family::P3x3 && s != Subgroup::P) {
          try {
            verdict(f, s);
          } catch (const DomainError&) {
            return true;
          }
          return false;
        }
        const Verdict v = verdict(f, s);
        if (v.reasons.empty()) return false;
        // Equal needs a witness satisfying both conditions
        if (v.answer == Answer::Equal) return v.witness && satisfies_two_conditions(mackey_metadata(f, s), *v.witness);
        return !v.witness;
      });
}

TEST_CASE("the dual action moves points inside their orbit and the witness brings them back") {
  prop::for_all(
      "orbit closure", 600, 205,
      [](Rng& rng) {
        FamilySpec f;
        do f = gen_family(rng);
        while (f.family == Family::P3x3 || f.family == Family::F4);
        const NGroupSpec spec = f.n_spec();
        DualPoint p = CharParam{random_vector(rng, spec.tag, spec.w_length(), 2.0)};
        if (spec.tag != AlgebraTag::Real && rng.coin()) p = CentralParam{random_unit_imaginary(rng, spec.tag) * rng.uniform(0.1, 4.0)};
        return std::tuple{f, p, random_ma(rng, spec)};
      },
      [](const auto& c) {
        const auto& [f, p, g] = c;
        const DualPoint q = std::holds_alternative<CharParam>(p) ? DualPoint{dual_char_act(g, std::get<CharParam>(p))}
                                                                 : DualPoint{dual_central_act(g, std::get<CentralParam>(p))};
        if (classify_orbit(f, q) != classify_orbit(f, p)) return false;
        const MAElement w = transitivity_witness(f, q, p);
        const DualPoint back = std::holds_alternative<CharParam>(p) ? DualPoint{dual_char_act(w, std::get<CharParam>(p))}
                                                                    : DualPoint{dual_central_act(w, std::get<CentralParam>(p))};
        return distance(back, q) < 1e-10 && is_valid(f.n_spec(), w);
      });
}

TEST_CASE("stabilizer elements fix their point and nothing else in general") {
  prop::for_all(
      "stabilizer", 600, 206,
      [](Rng& rng) {
        FamilySpec f;
        do f = gen_family(rng);
        while (f.family == Family::P3x3 || f.family == Family::F4);
        const NGroupSpec spec = f.n_spec();
        DualPoint p = CharParam{random_vector(rng, spec.tag, spec.w_length())};
        if (spec.tag != AlgebraTag::Real && rng.coin()) p = CentralParam{random_imaginary(rng, spec.tag)};
        return std::tuple{p, random_stabilizer_element(rng, f, p), random_ma(rng, spec, 0.5)};
      },
      [](const auto& c) {
        const auto& [p, h, g] = c;
        return stabilizer_membership(h, p) && stabilizer_algebraic(h, p) &&
               stabilizer_membership(g, p) == stabilizer_algebraic(g, p);
      });
}

TEST_CASE("descriptor text round trips") {
  prop::for_all(
      "descriptor", 300, 207,
      [](Rng& rng) {
        GroupDescriptor g = gen_chart_descriptor(rng);
        if (g.has_n_factor() && rng.coin()) g.kind = rng.coin() ? GroupKind::MN : GroupKind::P;
        return g;
      },
      [](const GroupDescriptor& g) { return GroupDescriptor::parse(g.to_string()) == g; });
}

}  // TEST_SUITE
