#include "paraharm/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "paraharm/errors.hpp"

namespace paraharm {

namespace {

constexpr int kOrder = 10;

struct Rule {
  std::array<double, kOrder> x;  // on [-1, 1]
  std::array<double, kOrder> w;
};

const Rule& legendre_rule() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, kOrder>;
    Rule r{};
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.x[k] = -a[i];
      r.w[k++] = w[i];
      r.x[k] = a[i];
      r.w[k++] = w[i];
    }
    return r;
  }();
  return rule;
}

std::complex<double> tensor_level(const Integrand& f, std::span<const double> lo, std::span<const double> hi,
                                  int panels, BoxRule kind, std::size_t& evals) {
  const Rule& rule = legendre_rule();
  const std::size_t dim = lo.size();
  const std::size_t per_axis = static_cast<std::size_t>(panels) * kOrder + (kind == BoxRule::Trapezoid ? 1 : 0);
  std::vector<std::vector<double>> nodes(dim), weights(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (kind == BoxRule::Trapezoid) {
      const int intervals = panels * kOrder;
      const double h = (hi[k] - lo[k]) / intervals;
      for (int i = 0; i <= intervals; ++i) {
        nodes[k].push_back(i == intervals ? hi[k] : lo[k] + i * h);
        weights[k].push_back(i == 0 || i == intervals ? 0.5 * h : h);
      }
      continue;
    }
    const double h = (hi[k] - lo[k]) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = lo[k] + (p + 0.5) * h;
      for (int i = 0; i < kOrder; ++i) {
        nodes[k].push_back(mid + 0.5 * h * rule.x[i]);
        weights[k].push_back(0.5 * h * rule.w[i]);
      }
    }
  }
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> point(dim);
  std::complex<double> sum = 0.0;
  if (dim == 0) return f(point);
  while (true) {
    double w = 1.0;
    for (std::size_t k = 0; k < dim; ++k) {
      point[k] = nodes[k][idx[k]];
      w *= weights[k][idx[k]];
    }
    sum += w * f(point);
    ++evals;
    std::size_t k = 0;
    while (k < dim && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == dim) break;
  }
  return sum;
}

std::string describe_box(std::span<const double> lo, std::span<const double> hi) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t k = 0; k < lo.size(); ++k) os << (k ? " x " : "") << "[" << lo[k] << ", " << hi[k] << "]";
  return os.str();
}

}  // namespace

QuadratureResult integrate_box(const Integrand& f, std::span<const double> lo, std::span<const double> hi,
                               const QuadratureOptions& opts) {
  if (lo.size() != hi.size()) throw DomainError("integrate_box: bound dimension mismatch");
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (!(hi[k] > lo[k]) || !std::isfinite(lo[k]) || !std::isfinite(hi[k])) {
      throw DomainError("integrate_box: empty or infinite box " + describe_box(lo, hi));
    }
  }
  QuadratureResult res;
  std::complex<double> prev = tensor_level(f, lo, hi, 1, opts.rule, res.evaluations);
  for (int panels = 2; panels <= opts.max_panels; panels *= 2) {
    const double level_evals = std::pow(static_cast<double>(panels * kOrder), static_cast<double>(lo.size()));
    if (level_evals > static_cast<double>(opts.max_evaluations)) break;
    const std::complex<double> cur = tensor_level(f, lo, hi, panels, opts.rule, res.evaluations);
    res.error = std::abs(cur - prev);
    res.value = cur;
    res.panels = panels;
    if (res.error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(cur))) return res;
    prev = cur;
  }
  std::ostringstream os;
  os.precision(10);
  os << "integrate_box: no convergence on " << describe_box(lo, hi) << " after " << res.panels
     << " panels per axis; last estimate " << res.value << ", level difference " << res.error << ", tolerance "
     << opts.abs_tol;
  throw QuadratureError(os.str());
}

double integrate_1d(const RealIntegrand& f, double a, double b, double tol, double* error) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, tol, &err);
  if (error) *error = err;
  if (!std::isfinite(v)) throw QuadratureError("integrate_1d: non-finite result");
  return v;
}

std::complex<double> integrate_1d_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                          double tol) {
  const double re = integrate_1d([&](double x) { return f(x).real(); }, a, b, tol);
  const double im = integrate_1d([&](double x) { return f(x).imag(); }, a, b, tol);
  return {re, im};
}

Point from_integration_variables(const GroupChart& chart, std::span<const double> u) {
  Point x(u.begin(), u.end());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (chart.is_positive(k)) x[k] = std::exp(u[k]);
  }
  return x;
}

QuadratureResult integrate_haar(const GroupChart& chart, const Integrand& f, std::span<const double> lo,
                                std::span<const double> hi, const QuadratureOptions& opts, HaarSide side) {
  if (lo.size() != chart.dimension()) throw DomainError("integrate_haar: box dimension does not match the chart");
  const Integrand g = [&](std::span<const double> u) {
    const Point x = from_integration_variables(chart, u);
    double jac = side == HaarSide::Left ? chart.left_density(x) : chart.right_density(x);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (chart.is_positive(k)) jac *= x[k];
    }
    return jac * f(x);
  };
  return integrate_box(g, lo, hi, opts);
}

}  // namespace paraharm
