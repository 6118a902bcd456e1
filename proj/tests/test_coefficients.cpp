#include <cmath>
#include <numbers>

#include "doctest.h"
#include "paraharm/coefficients.hpp"
#include "paraharm/errors.hpp"

using namespace paraharm;
using cd = std::complex<double>;

namespace {

constexpr AlgebraTag kC = AlgebraTag::Complex;

std::vector<Point> points(Rng& rng, const GroupChart& chart, std::size_t n, double scale) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng, chart, scale));
  return out;
}

// <lambda(a,b) f, f> on ax+b for f = exp(-(log^2 a + b^2)/2), done by hand:
// sqrt(pi) e^{(1 + 2l - l^2)/4} sqrt(2 pi / (1 + L^2)) e^{-p^2 / (2 (1 + L^2))}
// with L = 1/a, l = log L, p = -b/a.
double axb_by_hand(double a, double b) {
  const double big_l = 1.0 / a, l = std::log(big_l), p = -b / a, k = 1.0 + big_l * big_l;
  return std::sqrt(std::numbers::pi) * std::exp(0.25 * (1.0 + 2.0 * l - l * l)) * std::sqrt(2.0 * std::numbers::pi / k) *
         std::exp(-0.5 * p * p / k);
}

QuadratureOptions trapezoid(double abs_tol, int max_panels) {
  QuadratureOptions o;
  o.rule = BoxRule::Trapezoid;
  o.abs_tol = abs_tol;
  o.rel_tol = abs_tol;
  o.max_panels = max_panels;
  o.max_evaluations = 100'000'000;
  return o;
}

std::vector<Point> central_points(Rng& rng, const NGroupSpec& spec, std::size_t n) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(to_coordinates(n_central(spec, random_imaginary(rng, spec.tag, 5.0))));
  return out;
}

}  // namespace

TEST_SUITE("coefficients") {

TEST_CASE("regular coefficient at the identity is the squared norm") {
  const GroupChart chart(GroupDescriptor::axb());
  const ChartFunction f = gaussian_chart_function(chart, 1.0, 9.0);
  const CoefficientFn phi = regular_coefficient(chart, f, f, trapezoid(1e-12, 32));
  // int exp(-(u^2 + b^2)) e^{-u} du db = pi e^{1/4}
  CHECK(phi(chart.identity()).real() == doctest::Approx(std::numbers::pi * std::exp(0.25)).epsilon(1e-11));
  CHECK(std::abs(phi(chart.identity()).imag()) < 1e-14);
}

TEST_CASE("ax+b closed form against the hand derivation and quadrature") {
  const GroupChart chart(GroupDescriptor::axb());
  const CoefficientFn closed = affine_gaussian_coefficient(chart);
  const ChartFunction f = gaussian_chart_function(chart, 1.0, 9.0);
  const CoefficientFn numeric = regular_coefficient(chart, f, f, trapezoid(1e-12, 32));
  Rng rng(141);
  for (int k = 0; k < 20; ++k) {
    const Point g = random_point(rng, chart, 0.5);
    CHECK(closed(g).real() == doctest::Approx(axb_by_hand(g[0], g[1])).epsilon(1e-13));
    CHECK(std::abs(closed(g) - numeric(g)) < 1e-10);
  }
  // far out the quadrature cannot resolve the integrand but the closed form still can
  CHECK(closed(Point{std::exp(-8.0), 3.0}).real() == doctest::Approx(axb_by_hand(std::exp(-8.0), 3.0)).epsilon(1e-12));
}

TEST_CASE("closed form on N and AN against quadrature") {
  Rng rng(142);
  for (const char* name : {"N:R:3", "N:C:2", "AN:R:2", "AN:R:3"}) {
    const GroupChart chart(GroupDescriptor::parse(name));
    const CoefficientFn closed = affine_gaussian_coefficient(chart);
    const ChartFunction f = gaussian_chart_function(chart, 1.0, 9.0);
    const CoefficientFn numeric = regular_coefficient(chart, f, f, trapezoid(1e-10, chart.dimension() <= 2 ? 32 : 8));
    for (int k = 0; k < 2; ++k) {
      const Point g = random_point(rng, chart, 0.4);
      CHECK(std::abs(closed(g) - numeric(g)) / std::abs(numeric(g)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(affine_gaussian_coefficient(GroupChart(GroupDescriptor::p3x3())), UnsupportedError);
}

TEST_CASE("3x3 reduction against the direct 4D integral") {
  const GroupChart chart(GroupDescriptor::p3x3());
  const CoefficientFn reduced = p3x3_gaussian_coefficient(1.0);
  QuadratureOptions o = trapezoid(1e-9, 8);
  o.rel_tol = 1e-7;
  const ChartFunction f = gaussian_chart_function(chart, 1.0, 6.0);
  const CoefficientFn direct = regular_coefficient(chart, f, f, o);
  const Point g{std::exp(0.15), -0.1, 0.2, 0.12};
  CHECK(std::abs(reduced(g) - direct(g)) / std::abs(direct(g)) < 1e-6);
  // symmetric: phi(g^{-1}) = conj(phi(g))
  Rng rng(143);
  for (int k = 0; k < 20; ++k) {
    const Point h = random_point(rng, chart, 3.0);
    CHECK(std::abs(reduced(chart.inverse(h)) - std::conj(reduced(h))) < 1e-10 * std::abs(reduced(chart.identity())));
  }
}

TEST_CASE("Gram matrices") {
  Rng rng(144);
  const NGroupSpec spec{kC, 2};
  const GroupChart n(GroupDescriptor::of(GroupKind::N, spec));
  const CharParam v{random_vector(rng, kC, 1)};
  const GramReport chi = positive_definite_check(character_coefficient(spec, v), n, points(rng, n, 50, 2.0));
  CHECK(chi.min_eigenvalue >= -1e-10);
  CHECK(chi.hermitian_defect < 1e-12);
  // a character has rank-one Gram matrices
  CHECK(chi.max_eigenvalue == doctest::Approx(50.0).epsilon(1e-10));

  const CoefficientFn one{n.group(), "constant 1", [](std::span<const double>) { return cd(1.0, 0.0); }};
  const GramReport r1 = positive_definite_check(one, n, points(rng, n, 50, 2.0));
  CHECK(std::abs(r1.min_eigenvalue) < 1e-12);
  CHECK(r1.max_eigenvalue == doctest::Approx(50.0));

  for (double mu : {1.0, -2.5}) {
    const GramReport g = positive_definite_check(gaussian_coefficient_fn(spec, {AlgebraElement(kC, {0.0, mu})}), n,
                                                 points(rng, n, 50, 1.5));
    CHECK(g.min_eigenvalue >= -1e-10);
  }
  for (const char* name : {"AXB", "AN:C:2", "P3x3"}) {
    const GroupChart chart(GroupDescriptor::parse(name));
    const GramReport g = positive_definite_check(default_regular_coefficient(chart), chart, points(rng, chart, 50, 1.0));
    CHECK(g.min_eigenvalue >= -1e-10);
  }
  // not positive definite: phi(g) = -1 off the identity
  const CoefficientFn bad{n.group(), "bad", [](std::span<const double> x) {
                            return GroupChart::distance(x, Point(x.size(), 0.0)) < 1e-14 ? cd(1.0) : cd(-1.0);
                          }};
  CHECK(positive_definite_check(bad, n, points(rng, n, 5, 1.0)).min_eigenvalue < -1.0);
  CHECK_THROWS(positive_definite_check(one, n, points(rng, n, 1, 1.0)));
}

TEST_CASE("coset constancy along the centre") {
  Rng rng(145);
  const NGroupSpec spec{kC, 3};
  const GroupChart n(GroupDescriptor::of(GroupKind::N, spec));
  const std::vector<Point> z = central_points(rng, spec, 20);
  const std::vector<Point> g = points(rng, n, 20, 2.0);

  const CoefficientFn chi = character_coefficient(spec, {random_vector(rng, kC, 2)});
  CHECK(coset_constancy_check(chi, n, z, g));

  const CoefficientFn gauss = gaussian_coefficient_fn(spec, {AlgebraElement(kC, {0.0, 1.0})});
  CHECK(coset_constancy_check(gauss, n, z, g, 1e-10, CompareMode::Modulus));
  CHECK_FALSE(coset_constancy_check(gauss, n, z, g, 1e-10, CompareMode::Value));

  const CoefficientFn reg = default_regular_coefficient(n);
  CHECK_FALSE(coset_constancy_check(reg, n, z, g, 1e-10, CompareMode::Modulus));
}

TEST_CASE("decay sweep") {
  Rng rng(146);
  const GroupChart axb(GroupDescriptor::axb());
  const DecayReport r = decay_radius(affine_gaussian_coefficient(axb), axb, 1e-6, rng, 1.0, 64.0, 6);
  CHECK(r.found);
  CHECK(r.radius < 64.0);
  CHECK(r.levels.size() == 7);
  CHECK(r.levels.front().samples == 6 + 4);
  for (const DecayLevel& l : r.levels) {
    if (l.radius >= r.radius) CHECK(l.max_abs < 1e-6);
  }

  const NGroupSpec spec{kC, 2};
  const GroupChart n(GroupDescriptor::of(GroupKind::N, spec));
  const DecayReport never = decay_radius(character_coefficient(spec, {random_vector(rng, kC, 1)}), n, 1e-6, rng, 1.0, 16.0, 6);
  CHECK_FALSE(never.found);
}

TEST_CASE("ax+b support arithmetic") {
  const AxBBox kf{0.5, 2.0, -1.0, 1.0};
  const AxBBox kh{1.0, 3.0, 0.0, 2.0};
  const AxBBox box = axb_support_box(kf, kh);
  // every product y x^{-1} with x in kf, y in kh lands in the box
  for (double xa : {kf.a_lo, kf.a_hi})
    for (double xb : {kf.b_lo, kf.b_hi})
      for (double ya : {kh.a_lo, kh.a_hi})
        for (double yb : {kh.b_lo, kh.b_hi}) {
          const AxBElement g = axb_multiply({ya, yb}, axb_inverse({xa, xb}));
          CHECK(g.a >= box.a_lo - 1e-12);
          CHECK(g.a <= box.a_hi + 1e-12);
          CHECK(g.b >= box.b_lo - 1e-12);
          CHECK(g.b <= box.b_hi + 1e-12);
        }
  const GroupChart chart(GroupDescriptor::axb());
  QuadratureOptions opts;
  opts.abs_tol = 1e-8;
  const CoefficientFn phi = regular_coefficient(chart, bump_chart_function(chart, {kf.a_lo, kf.b_lo}, {kf.a_hi, kf.b_hi}),
                                                bump_chart_function(chart, {kh.a_lo, kh.b_lo}, {kh.a_hi, kh.b_hi}), opts);
  CHECK(phi(Point{box.a_hi * 1.5, 0.0}) == cd(0.0));
  CHECK(phi(Point{1.0, box.b_hi + 1.0}) == cd(0.0));
  CHECK(phi(Point{box.a_lo * 0.5, box.b_lo}) == cd(0.0));
  CHECK(std::abs(phi(Point{std::sqrt(box.a_lo * box.a_hi), 0.5 * (box.b_lo + box.b_hi)})) > 0.0);
}

}  // TEST_SUITE
