#pragma once

// Heisenberg-type groups N = F^{n-1} x Im F with product
//   (w1, z1)(w2, z2) = (w1 + w2, z1 + z2 + Im<w1, w2>).

#include <span>
#include <vector>

#include "paraharm/division_algebra.hpp"

namespace paraharm {

struct NGroupSpec {
  AlgebraTag tag = AlgebraTag::Complex;
  int n = 2;

  std::size_t w_length() const noexcept { return static_cast<std::size_t>(n - 1); }
  /// Real dimension d(n-1) + (d-1).
  std::size_t dimension() const noexcept;
  /// Throws DomainError when n < 2.
  void validate() const;

  friend bool operator==(const NGroupSpec&, const NGroupSpec&) = default;
};

struct NElement {
  FVector w;
  AlgebraElement z;  // purely imaginary

  NGroupSpec spec() const noexcept { return {w.tag(), static_cast<int>(w.size()) + 1}; }
};

bool operator==(const NElement& a, const NElement& b) noexcept;

NElement n_identity(const NGroupSpec& spec);
/// Throws DomainError if the element does not fit the spec or z has a real part.
void validate(const NGroupSpec& spec, const NElement& g, double tol = kDefaultTolerance);
NElement make_n_element(FVector w, AlgebraElement z);
NElement n_central(const NGroupSpec& spec, const AlgebraElement& z);

NElement n_multiply(const NElement& g1, const NElement& g2);
NElement n_inverse(const NElement& g);
/// g1 g2 g1^{-1} g2^{-1}, evaluated with four group products.
NElement commutator(const NElement& g1, const NElement& g2);
/// (0, 2 Im<w1, w2>).
NElement commutator_closed_form(const NElement& g1, const NElement& g2);
/// True iff w = 0 within tol.
bool is_central(const NElement& g, double tol = kDefaultTolerance);
double distance(const NElement& a, const NElement& b);

/// Real coordinates: the coefficients of w followed by the d-1 imaginary
/// coefficients of z.
std::vector<double> to_coordinates(const NElement& g);
NElement from_coordinates(const NGroupSpec& spec, std::span<const double> coords);

/// The abelian subgroup N0 = {(b, c)} of the 3x3 group.
struct N0Element {
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const N0Element&, const N0Element&) = default;
};

inline N0Element n0_multiply(N0Element x, N0Element y) noexcept { return {x.b + y.b, x.c + y.c}; }

}  // namespace paraharm
