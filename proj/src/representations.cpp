#include "paraharm/representations.hpp"

#include <cmath>
#include <numbers>

#include "paraharm/charts.hpp"
#include "paraharm/errors.hpp"

namespace paraharm {

std::complex<double> char_eval(const CharParam& v, const NElement& x) {
  if (v.v.tag() != x.w.tag() || v.v.size() != x.w.size()) throw DomainError("char_eval: spec mismatch");
  return std::polar(1.0, re(hermitian_form(x.w, v.v)));
}

double central_phase(const CentralParam& m, const AlgebraElement& z) {
  if (m.m.tag() != z.tag()) throw DomainError("central_phase: tag mismatch");
  if (!is_imaginary(z)) throw DomainError("central_phase: z must be purely imaginary");
  return -re(m.m * conjugate(z));
}

std::complex<double> central_char_eval(const CentralParam& m, const AlgebraElement& z) {
  return std::polar(1.0, central_phase(m, z));
}

PhaseSpaceOp PhaseSpaceOp::compose(const PhaseSpaceOp& rhs) const {
  if (size() != rhs.size()) throw DomainError("PhaseSpaceOp: size mismatch");
  PhaseSpaceOp r{q, xi, theta + rhs.theta};
  for (std::size_t i = 0; i < size(); ++i) {
    r.q[i] += rhs.q[i];
    r.xi[i] += rhs.xi[i];
    r.theta += rhs.xi[i] * q[i];
  }
  return r;
}

PhaseSpaceOp PhaseSpaceOp::inverse() const {
  PhaseSpaceOp r{q, xi, -theta};
  for (std::size_t i = 0; i < size(); ++i) {
    r.q[i] = -q[i];
    r.xi[i] = -xi[i];
    r.theta += xi[i] * q[i];
  }
  return r;
}

std::complex<double> PhaseSpaceOp::apply(const std::function<std::complex<double>(std::span<const double>)>& f,
                                         std::span<const double> x) const {
  if (x.size() != size()) throw DomainError("PhaseSpaceOp::apply: dimension mismatch");
  std::vector<double> shifted(x.begin(), x.end());
  double phase = theta;
  for (std::size_t i = 0; i < size(); ++i) {
    phase += xi[i] * x[i];
    shifted[i] += q[i];
  }
  return std::polar(1.0, phase) * f(shifted);
}

bool PhaseSpaceOp::is_scalar(double tol) const noexcept {
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::abs(q[i]) > tol || std::abs(xi[i]) > tol) return false;
  }
  return true;
}

double distance(const PhaseSpaceOp& a, const PhaseSpaceOp& b) {
  if (a.size() != b.size()) throw DomainError("PhaseSpaceOp: size mismatch");
  double d = std::abs(std::remainder(a.theta - b.theta, 2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max({d, std::abs(a.q[i] - b.q[i]), std::abs(a.xi[i] - b.xi[i])});
  }
  return d;
}

PhaseSpaceOp eta_op(const CentralParam& m, const NElement& x) {
  if (m.m.tag() != AlgebraTag::Complex || x.w.tag() != AlgebraTag::Complex) {
    throw UnsupportedError("eta_op is modeled for F = C only");
  }
  const double mu = m.m[1];
  if (mu == 0.0) throw DomainError("eta_op: m must be nonzero");
  const double kappa = std::sqrt(2.0 * std::abs(mu));
  const double sgn = mu > 0.0 ? 1.0 : -1.0;
  const std::size_t k = x.w.size();
  PhaseSpaceOp op = PhaseSpaceOp::identity(k);
  op.theta = -mu * x.z[1];
  for (std::size_t i = 0; i < k; ++i) {
    const double xr = x.w[i][0];
    const double yr = x.w[i][1];
    op.q[i] = kappa * xr;
    op.xi[i] = sgn * kappa * yr;
    op.theta += mu * xr * yr;
  }
  return op;
}

std::complex<double> gaussian_coefficient(const PhaseSpaceOp& op) {
  double sq = 0.0;
  double cross = 0.0;
  for (std::size_t i = 0; i < op.size(); ++i) {
    sq += op.q[i] * op.q[i] + op.xi[i] * op.xi[i];
    cross += op.xi[i] * op.q[i];
  }
  return std::polar(std::exp(-0.25 * sq), op.theta - 0.5 * cross);
}

std::complex<double> gaussian_coefficient(const CentralParam& m, const NElement& x) {
  return gaussian_coefficient(eta_op(m, x));
}

std::string_view to_string(InducingSubgroup h) noexcept {
  switch (h) {
    case InducingSubgroup::N0P1: return "N0P1";
    case InducingSubgroup::N0: return "N0";
    case InducingSubgroup::A: return "A";
  }
  return "?";
}

namespace {

std::vector<PMatrixElement> subgroup_samples(InducingSubgroup h) {
  switch (h) {
    case InducingSubgroup::N0P1: return {{1.0, 0.5, -1.0, 2.0}, {1.0, -3.0, 0.25, 0.0}};
    case InducingSubgroup::N0: return {{1.0, 0.0, 1.5, -0.5}, {1.0, 0.0, -2.0, 3.0}};
    case InducingSubgroup::A: return {{2.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.0}};
  }
  return {};
}

}  // namespace

bool invariant_measure_exists(InducingSubgroup h) {
  // Each H here is nilpotent or abelian, so Delta_H = 1.
  const GroupDescriptor p = GroupDescriptor::p3x3();
  for (const PMatrixElement& x : subgroup_samples(h)) {
    const Point pt = to_point(x);
    if (std::abs(modular_function(p, pt) - 1.0) > 1e-12) return false;
  }
  return true;
}

InducedModel::InducedModel(InducingSubgroup h, N0Char nu, double rho, CosetFunction f)
    : h_(h), nu_(nu), rho_(rho), f_(std::move(f)) {
  if (!invariant_measure_exists(h_)) {
    throw DomainError("P3x3 / " + std::string(to_string(h_)) +
                      " has no invariant measure: Delta_P is not Delta_H on the subgroup");
  }
  if (h_ == InducingSubgroup::N0P1 && nu_.s != 0.0) {
    throw DomainError("inducing from N0P1 needs a P1-fixed character nu = (0, t)");
  }
  if (h_ == InducingSubgroup::N0 && rho_ != 0.0) throw DomainError("rho is only used when inducing from N0P1");
  if (!f_) throw DomainError("InducedModel: empty coset function");
}

bool InducedModel::in_subgroup(const PMatrixElement& g, double tol) const noexcept {
  switch (h_) {
    case InducingSubgroup::N0P1: return std::abs(g.lambda - 1.0) <= tol;
    case InducingSubgroup::N0: return std::abs(g.lambda - 1.0) <= tol && std::abs(g.a) <= tol;
    case InducingSubgroup::A: return std::abs(g.a) <= tol && std::abs(g.b) <= tol && std::abs(g.c) <= tol;
  }
  return false;
}

std::complex<double> InducedModel::sigma(const PMatrixElement& h) const {
  if (h_ == InducingSubgroup::N0P1) return std::polar(1.0, nu_.t * h.b + rho_ * h.a);
  return n0_char_eval(nu_, {h.b, h.c});
}

std::vector<double> InducedModel::coset(const PMatrixElement& g) const {
  if (h_ == InducingSubgroup::N0P1) return {g.lambda};
  return {g.lambda, g.a};
}

PMatrixElement InducedModel::section(std::span<const double> c) const {
  if (h_ == InducingSubgroup::N0P1) return {c[0], 0.0, 0.0, 0.0};
  return {c[0], c[1], 0.0, 0.0};
}

std::complex<double> InducedModel::eval(const PMatrixElement& g) const {
  const std::vector<double> c = coset(g);
  const PMatrixElement h = p_multiply(p_inverse(section(c)), g);
  return f_(c) / sigma(h);
}

std::complex<double> InducedModel::translate(const PMatrixElement& x, const PMatrixElement& g) const {
  return eval(p_multiply(p_inverse(x), g));
}

}  // namespace paraharm
