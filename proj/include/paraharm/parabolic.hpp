#pragma once

// Concrete groups acting on N: the 3x3 group P = N0 x| P0, the ax+b group,
// and the semidirect products MA x| N of the rank-one parabolics.

#include <array>
#include <string>
#include <string_view>

#include "paraharm/families.hpp"
#include "paraharm/heisenberg.hpp"

namespace paraharm {

/// [[lambda, a, c], [0, 1/lambda, b], [0, 0, 1]] with lambda > 0.
struct PMatrixElement {
  double lambda = 1.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const PMatrixElement&, const PMatrixElement&) = default;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

PMatrixElement p_identity() noexcept;
PMatrixElement p_multiply(const PMatrixElement& g1, const PMatrixElement& g2) noexcept;
PMatrixElement p_inverse(const PMatrixElement& g) noexcept;
Matrix3 to_matrix(const PMatrixElement& g) noexcept;
/// Throws DomainError unless m has the shape of the group.
PMatrixElement from_matrix(const Matrix3& m);
void validate(const PMatrixElement& g);

/// Elements of P0 = {[[lambda, a, 0], [0, 1/lambda, 0], [0, 0, 1]]}.
struct P0Element {
  double lambda = 1.0;
  double a = 0.0;
  friend bool operator==(const P0Element&, const P0Element&) = default;
};

inline PMatrixElement embed(const P0Element& p) noexcept { return {p.lambda, p.a, 0.0, 0.0}; }
inline PMatrixElement embed(const N0Element& n) noexcept { return {1.0, 0.0, n.b, n.c}; }
P0Element p0_multiply(const P0Element& x, const P0Element& y) noexcept;
P0Element p0_inverse(const P0Element& x) noexcept;
/// Conjugation p n p^{-1} of N0 by P0: (c, b) -> (lambda c + a b, b / lambda).
N0Element p0_act_n0(const P0Element& p, const N0Element& n) noexcept;

/// x -> a x + b with a > 0.
struct AxBElement {
  double a = 1.0;
  double b = 0.0;
  friend bool operator==(const AxBElement&, const AxBElement&) = default;
};

AxBElement axb_multiply(const AxBElement& g1, const AxBElement& g2) noexcept;
AxBElement axb_inverse(const AxBElement& g) noexcept;

/// diag(beta, u, beta) in M times alpha in A. For F = O only the A part is
/// modeled: u = [1], beta = 1.
struct MAElement {
  FMatrix u;
  AlgebraElement beta;
  double alpha = 1.0;

  AlgebraTag tag() const noexcept { return u.tag(); }
};

MAElement ma_identity(const NGroupSpec& spec);
MAElement ma_multiply(const MAElement& g1, const MAElement& g2);
MAElement ma_inverse(const MAElement& g);
/// True when the group requires beta^2 det u = 1 (F = R or C).
constexpr bool has_determinant_constraint(AlgebraTag tag) noexcept {
  return tag == AlgebraTag::Real || tag == AlgebraTag::Complex;
}
/// Checks u^* u = I, |beta| = 1, alpha > 0, beta^2 det u = 1 for R and C,
/// beta = 1 for R, and the A-only restriction for O. Throws DomainError.
void validate(const NGroupSpec& spec, const MAElement& g, double tol = 1e-10);
bool is_valid(const NGroupSpec& spec, const MAElement& g, double tol = 1e-10);

/// The row-vector action w -> beta (w^T u^*): entry i is beta sum_j w_j conj(u_ij).
FVector m_row_action(const FMatrix& u, const AlgebraElement& beta, const FVector& w);

/// Action of MA on N by automorphisms:
///   (w, z) -> (alpha beta (w^T u^*), alpha^2 beta z beta^{-1}).
/// This is conjugation diag(beta, u, beta) n diag(beta, u, beta)^{-1} on the
/// upper-triangular matrix form of N.
NElement ma_act_n(const MAElement& g, const NElement& x);

/// n h with N normal; (n1, h1)(n2, h2) = (n1 (h1.n2), h1 h2).
struct SemidirectElement {
  NElement n;
  MAElement h;
};

SemidirectElement semidirect_identity(const NGroupSpec& spec);
SemidirectElement semidirect_multiply(const SemidirectElement& g1, const SemidirectElement& g2);
SemidirectElement semidirect_inverse(const SemidirectElement& g);
double distance(const MAElement& a, const MAElement& b);
double distance(const SemidirectElement& a, const SemidirectElement& b);

}  // namespace paraharm
