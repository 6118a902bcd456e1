#include "paraharm/parabolic.hpp"

#include <algorithm>
#include <cmath>

#include "paraharm/errors.hpp"

namespace paraharm {

PMatrixElement p_identity() noexcept { return {}; }

PMatrixElement p_multiply(const PMatrixElement& g1, const PMatrixElement& g2) noexcept {
  return {g1.lambda * g2.lambda, g1.lambda * g2.a + g1.a / g2.lambda, g2.b / g1.lambda + g1.b,
          g1.lambda * g2.c + g1.a * g2.b + g1.c};
}

PMatrixElement p_inverse(const PMatrixElement& g) noexcept {
  return {1.0 / g.lambda, -g.a, -g.lambda * g.b, g.a * g.b - g.c / g.lambda};
}

Matrix3 to_matrix(const PMatrixElement& g) noexcept {
  return {{{g.lambda, g.a, g.c}, {0.0, 1.0 / g.lambda, g.b}, {0.0, 0.0, 1.0}}};
}

PMatrixElement from_matrix(const Matrix3& m) {
  const double tol = 1e-12;
  const bool shape = std::abs(m[1][0]) <= tol && std::abs(m[2][0]) <= tol && std::abs(m[2][1]) <= tol &&
                     std::abs(m[2][2] - 1.0) <= tol && m[0][0] > 0.0 &&
                     std::abs(m[0][0] * m[1][1] - 1.0) <= tol * std::max(1.0, std::abs(m[0][0]));
  if (!shape) throw DomainError("matrix is not of the form [[l, a, c], [0, 1/l, b], [0, 0, 1]]");
  return {m[0][0], m[0][1], m[1][2], m[0][2]};
}

void validate(const PMatrixElement& g) {
  if (!(g.lambda > 0.0) || !std::isfinite(g.lambda) || !std::isfinite(g.a) || !std::isfinite(g.b) ||
      !std::isfinite(g.c)) {
    throw DomainError("PMatrixElement requires finite coordinates and lambda > 0");
  }
}

P0Element p0_multiply(const P0Element& x, const P0Element& y) noexcept {
  return {x.lambda * y.lambda, x.lambda * y.a + x.a / y.lambda};
}

P0Element p0_inverse(const P0Element& x) noexcept { return {1.0 / x.lambda, -x.a}; }

N0Element p0_act_n0(const P0Element& p, const N0Element& n) noexcept {
  return {n.b / p.lambda, p.lambda * n.c + p.a * n.b};
}

AxBElement axb_multiply(const AxBElement& g1, const AxBElement& g2) noexcept {
  return {g1.a * g2.a, g1.a * g2.b + g1.b};
}

AxBElement axb_inverse(const AxBElement& g) noexcept { return {1.0 / g.a, -g.b / g.a}; }

MAElement ma_identity(const NGroupSpec& spec) {
  spec.validate();
  return {FMatrix::identity(spec.tag, spec.w_length()), AlgebraElement::one(spec.tag), 1.0};
}

MAElement ma_multiply(const MAElement& g1, const MAElement& g2) {
  if (g1.tag() != g2.tag() || g1.u.size() != g2.u.size()) throw DomainError("MA elements from different groups");
  return {g1.u * g2.u, g1.beta * g2.beta, g1.alpha * g2.alpha};
}

MAElement ma_inverse(const MAElement& g) { return {adjoint(g.u), conjugate(g.beta), 1.0 / g.alpha}; }

namespace {

std::string ma_violation(const NGroupSpec& spec, const MAElement& g, double tol) {
  if (g.tag() != spec.tag || g.beta.tag() != spec.tag || g.u.size() != spec.w_length()) {
    return "element does not match the (F, n) spec";
  }
  if (!(g.alpha > 0.0) || !std::isfinite(g.alpha)) return "alpha must be positive";
  if (std::abs(norm(g.beta) - 1.0) > tol) return "beta must be a unit";
  if (!is_unitary(g.u, tol)) return "u must be unitary";
  switch (spec.tag) {
    case AlgebraTag::Real:
      if (std::abs(g.beta[0] - 1.0) > tol) return "beta must be 1 over R";
      break;
    case AlgebraTag::Octonion:
      if (distance(g.beta, AlgebraElement::one(spec.tag)) > tol ||
          distance(g.u, FMatrix::identity(spec.tag, 1)) > tol) {
        return "only the A part is modeled over O (u = [1], beta = 1)";
      }
      break;
    default: break;
  }
  if (has_determinant_constraint(spec.tag)) {
    const std::complex<double> b = to_complex(g.beta);
    if (std::abs(b * b * determinant(g.u) - 1.0) > tol) return "beta^2 det u must equal 1";
  }
  return {};
}

}  // namespace

void validate(const NGroupSpec& spec, const MAElement& g, double tol) {
  spec.validate();
  const std::string why = ma_violation(spec, g, tol);
  if (!why.empty()) throw DomainError("MAElement: " + why);
}

bool is_valid(const NGroupSpec& spec, const MAElement& g, double tol) {
  if (spec.n < 2) return false;
  return ma_violation(spec, g, tol).empty();
}

FVector m_row_action(const FMatrix& u, const AlgebraElement& beta, const FVector& w) {
  if (u.tag() != w.tag() || u.size() != w.size()) throw DomainError("m_row_action: size or tag mismatch");
  FVector out(w.tag(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    AlgebraElement s(w.tag());
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * conjugate(u(i, j));
    out[i] = beta * s;
  }
  return out;
}

NElement ma_act_n(const MAElement& g, const NElement& x) {
  if (g.tag() != x.w.tag() || g.u.size() != x.w.size()) throw DomainError("ma_act_n: spec mismatch");
  NElement y{m_row_action(g.u, g.beta, x.w) * g.alpha, (g.beta * x.z) * conjugate(g.beta)};
  y.z *= g.alpha * g.alpha;
  return y;
}

SemidirectElement semidirect_identity(const NGroupSpec& spec) { return {n_identity(spec), ma_identity(spec)}; }

SemidirectElement semidirect_multiply(const SemidirectElement& g1, const SemidirectElement& g2) {
  return {n_multiply(g1.n, ma_act_n(g1.h, g2.n)), ma_multiply(g1.h, g2.h)};
}

SemidirectElement semidirect_inverse(const SemidirectElement& g) {
  const MAElement hi = ma_inverse(g.h);
  return {ma_act_n(hi, n_inverse(g.n)), hi};
}

double distance(const MAElement& a, const MAElement& b) {
  return std::max({distance(a.u, b.u), distance(a.beta, b.beta), std::abs(a.alpha - b.alpha)});
}

double distance(const SemidirectElement& a, const SemidirectElement& b) {
  return std::max(distance(a.n, b.n), distance(a.h, b.h));
}

}  // namespace paraharm
