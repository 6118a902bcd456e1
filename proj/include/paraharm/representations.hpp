#pragma once

// Characters of N, central characters, the phase-space model of eta_m for
// F = C, and the induced-representation model on the 3x3 group.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "paraharm/dual_orbits.hpp"
#include "paraharm/heisenberg.hpp"
#include "paraharm/parabolic.hpp"

namespace paraharm {

/// exp(i Re<w, v>).
std::complex<double> char_eval(const CharParam& v, const NElement& x);
/// lambda(z) = -Re(m conj(z)).
double central_phase(const CentralParam& m, const AlgebraElement& z);
/// exp(i lambda(z)).
std::complex<double> central_char_eval(const CentralParam& m, const AlgebraElement& z);

/// f(x) -> e^{i theta} e^{i xi.x} f(x + q) on L^2(R^k).
struct PhaseSpaceOp {
  std::vector<double> q;
  std::vector<double> xi;
  double theta = 0.0;

  static PhaseSpaceOp identity(std::size_t k) { return {std::vector<double>(k, 0.0), std::vector<double>(k, 0.0), 0.0}; }
  std::size_t size() const noexcept { return q.size(); }
  /// (A o B) f = A(B f).
  PhaseSpaceOp compose(const PhaseSpaceOp& rhs) const;
  PhaseSpaceOp inverse() const;
  /// (A f)(x) for a function f on R^k.
  std::complex<double> apply(const std::function<std::complex<double>(std::span<const double>)>& f,
                             std::span<const double> x) const;
  /// True if the operator is the scalar e^{i theta}.
  bool is_scalar(double tol = 0.0) const noexcept;
};

/// Phase distance: max over q, xi and the wrapped difference of theta.
double distance(const PhaseSpaceOp& a, const PhaseSpaceOp& b);

/// The operator eta_m(x) for F = C, m = i mu, x = (w, i s) with w = x + i y:
///   q = kappa x, xi = sgn(mu) kappa y, theta = -mu s + mu x.y, kappa = sqrt(2|mu|).
/// Throws UnsupportedError for other algebras.
PhaseSpaceOp eta_op(const CentralParam& m, const NElement& x);

/// <eta_m(x) phi0, phi0> for the unit Gaussian phi0(x) = pi^{-k/4} e^{-|x|^2/2}:
///   e^{i theta} exp(-(|q|^2 + |xi|^2)/4) exp(-i xi.q/2).
std::complex<double> gaussian_coefficient(const CentralParam& m, const NElement& x);
std::complex<double> gaussian_coefficient(const PhaseSpaceOp& op);

/// Subgroups H of the 3x3 group used for induction.
enum class InducingSubgroup {
  N0P1,  // {(1, a, b, c)}; coset space {lambda > 0}
  N0,    // {(1, 0, b, c)}; coset space P0
  A,     // {(lambda, 0, 0, 0)}; no invariant measure on P/A
};

std::string_view to_string(InducingSubgroup h) noexcept;

/// True iff Delta_P restricted to H equals Delta_H, checked at sample points of H.
bool invariant_measure_exists(InducingSubgroup h);

/// Ind_H^P sigma realized on functions f with f(g h) = sigma(h)^{-1} f(g),
/// written f(g) = sigma(s(g)^{-1} g)^{-1} F(coset(g)) with the section
/// s = (lambda, 0, 0, 0) for N0P1 and s = (lambda, a, 0, 0) for N0.
///
/// sigma(h) = exp(i (t b_h + rho a_h)) on N0P1 (nu = (0, t) extended by a
/// character rho of P1), and sigma = nu(c_h, b_h) on N0.
class InducedModel {
 public:
  using CosetFunction = std::function<std::complex<double>(std::span<const double>)>;

  /// Throws DomainError if P/H has no invariant measure or nu is not P1-fixed
  /// when inducing from N0P1.
  InducedModel(InducingSubgroup h, N0Char nu, double rho, CosetFunction f);

  InducingSubgroup subgroup() const noexcept { return h_; }
  /// sigma on H; g must lie in H.
  std::complex<double> sigma(const PMatrixElement& h) const;
  /// Coset coordinates of g: (lambda) or (lambda, a).
  std::vector<double> coset(const PMatrixElement& g) const;
  PMatrixElement section(std::span<const double> coset) const;
  /// f(g).
  std::complex<double> eval(const PMatrixElement& g) const;
  /// (pi(x) f)(g) = f(x^{-1} g).
  std::complex<double> translate(const PMatrixElement& x, const PMatrixElement& g) const;
  bool in_subgroup(const PMatrixElement& g, double tol = 0.0) const noexcept;

 private:
  InducingSubgroup h_;
  N0Char nu_;
  double rho_;
  CosetFunction f_;
};

}  // namespace paraharm
