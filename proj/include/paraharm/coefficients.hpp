#pragma once

// Matrix coefficients as functions on chart coordinates, and the analytic
// checks run on them.

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "paraharm/charts.hpp"
#include "paraharm/quadrature.hpp"
#include "paraharm/representations.hpp"
#include "paraharm/sampling.hpp"

namespace paraharm {

struct CoefficientFn {
  GroupDescriptor group;
  /// Which representation and which vectors, e.g. "chi_v v=(1,0)".
  std::string provenance;
  std::function<std::complex<double>(std::span<const double>)> eval;

  std::complex<double> operator()(std::span<const double> g) const { return eval(g); }
};

/// chi_v on N, in N coordinates.
CoefficientFn character_coefficient(const NGroupSpec& spec, const CharParam& v);
/// <eta_m(x) phi0, phi0> on N (F = C).
CoefficientFn gaussian_coefficient_fn(const NGroupSpec& spec, const CentralParam& m);

/// A function on a chart together with a box containing its support, in
/// integration variables (log x on positive axes).
struct ChartFunction {
  std::function<std::complex<double>(std::span<const double>)> f;
  std::vector<double> lo;
  std::vector<double> hi;
  std::string name;
};

/// phi(g) = int f(g^{-1} x) conj(h(x)) d mu_L(x), integrated over h's box.
/// Quadrature failures propagate as QuadratureError.
CoefficientFn regular_coefficient(const GroupChart& chart, ChartFunction f, ChartFunction h,
                                  QuadratureOptions opts = {});

/// <lambda(g) f, f> on the 3x3 group for
///   f = exp(-(log^2 lambda / (2 s^2) + (a^2 + b^2 + c^2) / 2)).
/// The (b, c) and a integrals are Gaussian and done in closed form; the
/// remaining log lambda integral goes to Gauss-Kronrod.
CoefficientFn p3x3_gaussian_coefficient(double s = 1.0);

/// <lambda(g) f, f> on N, AN or AXB for the unit Gaussian
/// f = gaussian_chart_function(chart). n_x -> (g^{-1} x)_N is affine with
/// linear part M and offset t, so the N integral is
///   (2 pi)^{D/2} det(I + M M^T)^{-1/2} exp(-t^T (I + M M^T)^{-1} t / 2),
/// and the log alpha integral is Gaussian as well.
CoefficientFn affine_gaussian_coefficient(const GroupChart& chart);

/// <lambda(g) f, f> for the unit Gaussian f = gaussian_chart_function(chart),
/// in closed or reduced form: p3x3_gaussian_coefficient(1) on P3x3,
/// affine_gaussian_coefficient otherwise.
CoefficientFn default_regular_coefficient(const GroupChart& chart);

/// exp(-|u|^2 / (2 width^2)) over a box of half-width `cutoff` in integration
/// variables, centred at the identity.
ChartFunction gaussian_chart_function(const GroupChart& chart, double width = 1.0, double cutoff = 8.0);
/// The bump prod_k exp(1 - 1 / (1 - r_k^2)) on the box [lo, hi] (chart
/// coordinates, r_k the rescaled distance to the centre); exactly zero outside.
ChartFunction bump_chart_function(const GroupChart& chart, std::vector<double> lo, std::vector<double> hi);

struct GramReport {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double hermitian_defect = 0.0;  // max |G_ij - conj(G_ji)|
  std::size_t size = 0;
};

/// Gram matrix [phi(g_i^{-1} g_j)]; eigenvalues of its hermitian part.
/// Needs at least 2 points.
GramReport positive_definite_check(const CoefficientFn& phi, const GroupChart& chart,
                                   const std::vector<Point>& points);

enum class CompareMode { Value, Modulus };

/// True iff phi(g h) = phi(g) (or |phi(g h)| = |phi(g)|) within tol.
bool coset_constancy_check(const CoefficientFn& phi, const GroupChart& chart, const std::vector<Point>& h_samples,
                           const std::vector<Point>& g_samples, double tol = 1e-10,
                           CompareMode mode = CompareMode::Value);

struct DecayLevel {
  double radius = 0.0;
  double max_abs = 0.0;
  std::size_t samples = 0;
};

struct DecayReport {
  double epsilon = 0.0;
  bool found = false;
  /// Smallest swept radius from which every level stays below epsilon.
  double radius = 0.0;
  std::vector<DecayLevel> levels;
};

/// Doubling sweep r0, 2 r0, ... <= r_max over points at integration-variable
/// norm r: the 2 dim coordinate directions plus random ones.
DecayReport decay_radius(const CoefficientFn& phi, const GroupChart& chart, double epsilon, Rng& rng,
                         double r0 = 1.0, double r_max = 16.0, std::size_t samples_per_level = 8);

/// Box in ax+b coordinates.
struct AxBBox {
  double a_lo, a_hi, b_lo, b_hi;
  bool contains(double a, double b) const noexcept { return a >= a_lo && a <= a_hi && b >= b_lo && b <= b_hi; }
};

/// Box containing K_h K_f^{-1}, outside of which int f(g^{-1}x) conj h(x) dx
/// vanishes when f, h are supported in K_f, K_h.
AxBBox axb_support_box(const AxBBox& kf, const AxBBox& kh);

}  // namespace paraharm
