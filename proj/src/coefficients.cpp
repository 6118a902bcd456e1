#include "paraharm/coefficients.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "paraharm/errors.hpp"

namespace paraharm {

namespace {

std::string describe(const FVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

CoefficientFn character_coefficient(const NGroupSpec& spec, const CharParam& v) {
  spec.validate();
  std::ostringstream os;
  os << "chi_v v=" << describe(v.v);
  return {GroupDescriptor::of(GroupKind::N, spec), os.str(),
          [spec, v](std::span<const double> x) { return char_eval(v, from_coordinates(spec, x)); }};
}

CoefficientFn gaussian_coefficient_fn(const NGroupSpec& spec, const CentralParam& m) {
  if (spec.tag != AlgebraTag::Complex) throw UnsupportedError("gaussian coefficients are modeled for F = C only");
  std::ostringstream os;
  os << "<eta_m(x) phi0, phi0> m=" << m.m;
  return {GroupDescriptor::of(GroupKind::N, spec), os.str(),
          [spec, m](std::span<const double> x) { return gaussian_coefficient(m, from_coordinates(spec, x)); }};
}

CoefficientFn regular_coefficient(const GroupChart& chart, ChartFunction f, ChartFunction h, QuadratureOptions opts) {
  if (h.lo.size() != chart.dimension() || h.hi.size() != chart.dimension()) {
    throw DomainError("regular_coefficient: support box of h does not match the chart");
  }
  std::string prov = "<lambda(g) f, h> f=" + f.name + " h=" + h.name;
  auto eval = [chart, f = std::move(f), h = std::move(h), opts](std::span<const double> g) {
    const Point gi = chart.inverse(g);
    const Integrand integrand = [&](std::span<const double> x) -> std::complex<double> {
      const std::complex<double> hv = h.f(x);
      if (hv == 0.0) return 0.0;
      return f.f(chart.multiply(gi, x)) * std::conj(hv);
    };
    return integrate_haar(chart, integrand, h.lo, h.hi, opts).value;
  };
  return {chart.group(), std::move(prov), std::move(eval)};
}

CoefficientFn p3x3_gaussian_coefficient(double s) {
  if (!(s > 0.0)) throw DomainError("p3x3_gaussian_coefficient: width must be positive");
  std::ostringstream prov;
  prov << "<lambda(g) f, f> f=gaussian(log-width=" << s << ") on P3x3, reduced to a log-lambda integral";
  auto eval = [s](std::span<const double> g) -> std::complex<double> {
    // y = g^{-1} x:  lambda_y = l lambda_x,  a_y = l a_x + p / lambda_x,
    //                b_y = b_x / l + q,      c_y = p b_x + l c_x + r.
    const PMatrixElement gi = p_inverse(to_p_element(g));
    const double l = gi.lambda, p = gi.a, q = gi.b, r = gi.c;
    // int exp(-|A z + t|^2 / 2 - |z|^2 / 2) dz over (b_x, c_x)
    //   = 2 pi det(N)^{-1/2} exp(-t^T N^{-1} t / 2),  N = I + A A^T,
    // with the exponent a sum of squares through the Cholesky factor of N.
    const double a11 = 1.0 / l, a21 = p, a22 = l;
    const double n11 = 1.0 + a11 * a11;
    const double l11 = std::sqrt(n11);
    const double l21 = a11 * a21 / l11;
    const double l22 = std::sqrt(1.0 + a22 * a22 + a21 * a21 / n11);
    const double y1 = q / l11;
    const double y2 = (r - l21 * y1) / l22;
    const double bc = 2.0 * std::numbers::pi / (l11 * l22) * std::exp(-0.5 * (y1 * y1 + y2 * y2));
    // a_x integral in closed form, then u = log lambda_x; the left density
    // lambda^{-2} d lambda becomes e^{-u} du.
    const double ell = std::log(l);
    const double k = 1.0 + l * l;
    const double c2 = 0.5 / (s * s);
    const auto integrand = [&](double u) {
      const double shift = p * std::exp(-u);
      return std::exp(-c2 * ((u + ell) * (u + ell) + u * u) - u - 0.5 * shift * shift / k);
    };
    const double centre = -0.5 * ell - 0.5 * s * s;
    const double half = 15.0 * s;
    const double u_part = integrate_1d(integrand, centre - half, centre + half, 1e-13);
    return bc * std::sqrt(2.0 * std::numbers::pi / k) * u_part;
  };
  return {GroupDescriptor::p3x3(), prov.str(), std::move(eval)};
}

CoefficientFn affine_gaussian_coefficient(const GroupChart& chart) {
  const GroupKind kind = chart.group().kind;
  if (kind != GroupKind::N && kind != GroupKind::AN && kind != GroupKind::AXB) {
    throw UnsupportedError("affine_gaussian_coefficient: needs an N, AN or AXB chart");
  }
  const std::size_t o = chart.is_positive(0) ? 1 : 0;
  const std::size_t dim = chart.dimension();
  const auto nd = static_cast<Eigen::Index>(dim - o);
  // left density times the log Jacobian is alpha^{-kappa}
  double kappa = 0.0;
  if (o == 1) {
    Point e = chart.identity();
    e[0] = std::numbers::e;
    kappa = -(std::log(chart.left_density(e)) + 1.0);
  }
  auto eval = [chart, o, dim, nd, kappa](std::span<const double> g) -> std::complex<double> {
    const Point gi = chart.inverse(g);
    Point x = chart.identity();
    const auto image = [&](Eigen::VectorXd& out) {
      const Point y = chart.multiply(gi, x);
      for (Eigen::Index k = 0; k < nd; ++k) out(k) = y[o + static_cast<std::size_t>(k)];
    };
    Eigen::VectorXd t(nd), col(nd);
    image(t);
    Eigen::MatrixXd m(nd, nd);
    for (std::size_t k = o; k < dim; ++k) {
      x[k] = 1.0;
      image(col);
      m.col(static_cast<Eigen::Index>(k - o)) = col - t;
      x[k] = 0.0;
    }
    const Eigen::MatrixXd n = Eigen::MatrixXd::Identity(nd, nd) + m * m.transpose();
    const Eigen::LLT<Eigen::MatrixXd> llt(n);
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::VectorXd y = llt.matrixL().solve(t);
    double log_value = 0.5 * static_cast<double>(nd) * std::log(2.0 * std::numbers::pi) - 0.5 * y.squaredNorm();
    for (Eigen::Index k = 0; k < nd; ++k) log_value -= std::log(l(k, k));
    if (o == 1) {
      // int exp(-(u + ell)^2 / 2 - u^2 / 2 - kappa u) du
      const double ell = std::log(gi[0]);
      log_value += 0.5 * std::log(std::numbers::pi) + 0.25 * (kappa * kappa + 2.0 * kappa * ell - ell * ell);
    }
    return std::exp(log_value);
  };
  return {chart.group(), "<lambda(g) f, f> f=gaussian(width=1), closed form", std::move(eval)};
}

CoefficientFn default_regular_coefficient(const GroupChart& chart) {
  if (chart.group().kind == GroupKind::P3x3) return p3x3_gaussian_coefficient(1.0);
  return affine_gaussian_coefficient(chart);
}

ChartFunction gaussian_chart_function(const GroupChart& chart, double width, double cutoff) {
  const std::size_t dim = chart.dimension();
  std::vector<bool> positive(dim);
  for (std::size_t k = 0; k < dim; ++k) positive[k] = chart.is_positive(k);
  const double c = 0.5 / (width * width);
  std::ostringstream name;
  name << "gaussian(width=" << width << ")";
  return {[positive, c](std::span<const double> x) -> std::complex<double> {
            double r2 = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) {
              const double u = positive[k] ? std::log(x[k]) : x[k];
              r2 += u * u;
            }
            return std::exp(-c * r2);
          },
          std::vector<double>(dim, -cutoff), std::vector<double>(dim, cutoff), name.str()};
}

ChartFunction bump_chart_function(const GroupChart& chart, std::vector<double> lo, std::vector<double> hi) {
  const std::size_t dim = chart.dimension();
  if (lo.size() != dim || hi.size() != dim) throw DomainError("bump: box does not match the chart");
  std::vector<double> ulo(dim), uhi(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (!(hi[k] > lo[k])) throw DomainError("bump: empty box");
    if (chart.is_positive(k) && !(lo[k] > 0.0)) throw DomainError("bump: positive coordinate needs lo > 0");
    ulo[k] = chart.is_positive(k) ? std::log(lo[k]) : lo[k];
    uhi[k] = chart.is_positive(k) ? std::log(hi[k]) : hi[k];
  }
  std::ostringstream name;
  name << "bump[";
  for (std::size_t k = 0; k < dim; ++k) name << (k ? " x " : "") << lo[k] << ".." << hi[k];
  name << "]";
  return {[lo, hi](std::span<const double> x) -> std::complex<double> {
            double v = 1.0;
            for (std::size_t k = 0; k < x.size(); ++k) {
              const double mid = 0.5 * (lo[k] + hi[k]);
              const double r = (x[k] - mid) / (0.5 * (hi[k] - lo[k]));
              if (r <= -1.0 || r >= 1.0) return 0.0;
              v *= std::exp(1.0 - 1.0 / (1.0 - r * r));
            }
            return v;
          },
          ulo, uhi, name.str()};
}

GramReport positive_definite_check(const CoefficientFn& phi, const GroupChart& chart,
                                   const std::vector<Point>& points) {
  if (points.size() < 2) throw DomainError("positive_definite_check needs at least 2 points");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXcd g(n, n);
  std::vector<Point> inv;
  inv.reserve(points.size());
  for (const Point& p : points) inv.push_back(chart.inverse(p));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = phi(chart.multiply(inv[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]));
    }
  }
  GramReport rep;
  rep.size = points.size();
  rep.hermitian_defect = (g - g.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd herm = 0.5 * (g + g.adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  rep.max_eigenvalue = es.eigenvalues().maxCoeff();
  return rep;
}

bool coset_constancy_check(const CoefficientFn& phi, const GroupChart& chart, const std::vector<Point>& h_samples,
                           const std::vector<Point>& g_samples, double tol, CompareMode mode) {
  for (const Point& g : g_samples) {
    const std::complex<double> base = phi(g);
    for (const Point& h : h_samples) {
      const std::complex<double> moved = phi(chart.multiply(g, h));
      const double diff = mode == CompareMode::Value ? std::abs(moved - base) : std::abs(std::abs(moved) - std::abs(base));
      if (diff > tol) return false;
    }
  }
  return true;
}

DecayReport decay_radius(const CoefficientFn& phi, const GroupChart& chart, double epsilon, Rng& rng, double r0,
                         double r_max, std::size_t samples_per_level) {
  if (!(r0 > 0.0) || !(r_max >= r0)) throw DomainError("decay_radius: need 0 < r0 <= r_max");
  DecayReport rep;
  rep.epsilon = epsilon;
  const std::size_t dim = chart.dimension();
  for (double r = r0; r <= r_max * (1.0 + 1e-12); r *= 2.0) {
    DecayLevel level{r, 0.0, samples_per_level + 2 * dim};
    for (std::size_t k = 0; k < 2 * dim; ++k) {
      std::vector<double> u(dim, 0.0);
      u[k / 2] = k % 2 ? -r : r;
      level.max_abs = std::max(level.max_abs, std::abs(phi(from_integration_variables(chart, u))));
    }
    for (std::size_t s = 0; s < samples_per_level; ++s) {
      std::vector<double> u(dim);
      double n2 = 0.0;
      do {
        n2 = 0.0;
        for (double& x : u) {
          x = rng.normal();
          n2 += x * x;
        }
      } while (n2 < 1e-6);
      for (double& x : u) x *= r / std::sqrt(n2);
      level.max_abs = std::max(level.max_abs, std::abs(phi(from_integration_variables(chart, u))));
    }
    rep.levels.push_back(level);
  }
  for (std::size_t i = rep.levels.size(); i-- > 0;) {
    if (rep.levels[i].max_abs >= epsilon) break;
    rep.found = true;
    rep.radius = rep.levels[i].radius;
  }
  return rep;
}

AxBBox axb_support_box(const AxBBox& kf, const AxBBox& kh) {
  if (!(kf.a_lo > 0.0) || !(kh.a_lo > 0.0)) throw DomainError("axb_support_box: a-intervals must be positive");
  // K_f^{-1} = {(1/a, -b/a)}.
  const double ia_lo = 1.0 / kf.a_hi;
  const double ia_hi = 1.0 / kf.a_lo;
  const double q[4] = {-kf.b_lo / kf.a_lo, -kf.b_lo / kf.a_hi, -kf.b_hi / kf.a_lo, -kf.b_hi / kf.a_hi};
  const double ib_lo = *std::min_element(q, q + 4);
  const double ib_hi = *std::max_element(q, q + 4);
  // (a1, b1)(a2, b2) = (a1 a2, a1 b2 + b1).
  const double p[4] = {kh.a_lo * ib_lo, kh.a_lo * ib_hi, kh.a_hi * ib_lo, kh.a_hi * ib_hi};
  return {kh.a_lo * ia_lo, kh.a_hi * ia_hi, *std::min_element(p, p + 4) + kh.b_lo, *std::max_element(p, p + 4) + kh.b_hi};
}

}  // namespace paraharm
