#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "paraharm/charts.hpp"

namespace paraharm {

using Integrand = std::function<std::complex<double>(std::span<const double>)>;
using RealIntegrand = std::function<double(double)>;

enum class BoxRule {
  GaussLegendre,  // 10 nodes per panel
  Trapezoid,      // 10 intervals per panel; geometric convergence for smooth integrands decaying at the box faces
};

struct QuadratureOptions {
  BoxRule rule = BoxRule::GaussLegendre;
  double abs_tol = 1e-8;
  double rel_tol = 0.0;
  /// Panel doubling stops after this many panels per axis.
  int max_panels = 32;
  /// Hard cap on integrand evaluations per refinement level.
  std::size_t max_evaluations = 20'000'000;
};

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;  // difference between the last two refinement levels
  int panels = 0;      // per axis
  std::size_t evaluations = 0;
};

/// Composite tensor rule on [lo, hi], with the number of panels per axis
/// doubled until two levels agree. Throws
/// QuadratureError, naming the box and the last estimates, on failure.
QuadratureResult integrate_box(const Integrand& f, std::span<const double> lo, std::span<const double> hi,
                               const QuadratureOptions& opts = {});

/// Adaptive 15-point Gauss-Kronrod on [a, b]; infinite limits allowed.
double integrate_1d(const RealIntegrand& f, double a, double b, double tol = 1e-12, double* error = nullptr);
std::complex<double> integrate_1d_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                          double tol = 1e-12);

enum class HaarSide { Left, Right };

/// Integral of f against the chart's left (or right) Haar density. The box is
/// given in integration variables: log x for positive coordinates, x itself
/// otherwise.
QuadratureResult integrate_haar(const GroupChart& chart, const Integrand& f, std::span<const double> lo,
                                std::span<const double> hi, const QuadratureOptions& opts = {},
                                HaarSide side = HaarSide::Left);

/// Map integration variables to chart coordinates (exp on positive axes).
Point from_integration_variables(const GroupChart& chart, std::span<const double> u);

}  // namespace paraharm
