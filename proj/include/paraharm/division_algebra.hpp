#pragma once

// Real normed division algebras R, C, H, O built by Cayley-Dickson doubling,
// vectors over them (right modules) and small square matrices.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paraharm {

inline constexpr double kDefaultTolerance = 1e-12;

enum class AlgebraTag { Real, Complex, Quaternion, Octonion };

constexpr std::size_t dimension(AlgebraTag tag) noexcept {
  switch (tag) {
    case AlgebraTag::Real: return 1;
    case AlgebraTag::Complex: return 2;
    case AlgebraTag::Quaternion: return 4;
    case AlgebraTag::Octonion: return 8;
  }
  return 0;
}

constexpr bool is_associative(AlgebraTag tag) noexcept { return tag != AlgebraTag::Octonion; }
constexpr bool is_commutative(AlgebraTag tag) noexcept {
  return tag == AlgebraTag::Real || tag == AlgebraTag::Complex;
}

/// "R", "C", "H" or "O".
std::string_view to_string(AlgebraTag tag) noexcept;
AlgebraTag parse_algebra_tag(std::string_view text);

/// An element of one of the four algebras, stored as real coefficients over
/// the basis 1, e1, ..., e_{d-1}. For H the basis is 1, i, j, k.
class AlgebraElement {
 public:
  static constexpr std::size_t kMaxDim = 8;

  AlgebraElement() = default;
  explicit AlgebraElement(AlgebraTag tag) noexcept : tag_(tag) {}
  AlgebraElement(AlgebraTag tag, std::initializer_list<double> coeffs);
  AlgebraElement(AlgebraTag tag, std::span<const double> coeffs);

  static AlgebraElement real(AlgebraTag tag, double value) noexcept;
  static AlgebraElement one(AlgebraTag tag) noexcept { return real(tag, 1.0); }
  /// The basis unit e_index (e_0 = 1).
  static AlgebraElement basis(AlgebraTag tag, std::size_t index);

  AlgebraTag tag() const noexcept { return tag_; }
  std::size_t dim() const noexcept { return dimension(tag_); }

  double operator[](std::size_t i) const noexcept { return c_[i]; }
  double& operator[](std::size_t i) noexcept { return c_[i]; }
  std::span<const double> coeffs() const noexcept { return {c_.data(), dim()}; }

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(double s) noexcept;

 private:
  AlgebraTag tag_ = AlgebraTag::Real;
  std::array<double, kMaxDim> c_{};
};

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x) noexcept;
AlgebraElement operator*(AlgebraElement x, double s) noexcept;
AlgebraElement operator*(double s, AlgebraElement x) noexcept;
AlgebraElement operator/(AlgebraElement x, double s) noexcept;
/// Algebra product; see multiply().
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
bool operator==(const AlgebraElement& x, const AlgebraElement& y) noexcept;

/// Cayley-Dickson product (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
/// Throws DomainError on tag mismatch.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement conjugate(const AlgebraElement& x) noexcept;
double re(const AlgebraElement& x) noexcept;
AlgebraElement im(const AlgebraElement& x) noexcept;
double norm2(const AlgebraElement& x) noexcept;
double norm(const AlgebraElement& x) noexcept;
/// conj(x) / |x|^2. Throws DomainError for x = 0.
AlgebraElement inverse(const AlgebraElement& x);
bool is_imaginary(const AlgebraElement& x, double tol = kDefaultTolerance) noexcept;
/// Max-coefficient distance.
double distance(const AlgebraElement& x, const AlgebraElement& y);
bool approx_equal(const AlgebraElement& x, const AlgebraElement& y, double tol = kDefaultTolerance);

/// Complex view of an element of R or C.
std::complex<double> to_complex(const AlgebraElement& x);
AlgebraElement from_complex(AlgebraTag tag, std::complex<double> z);

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);

/// A column vector in F^k. Scalars act on the right where it matters.
class FVector {
 public:
  FVector() = default;
  FVector(AlgebraTag tag, std::size_t size) : tag_(tag), entries_(size, AlgebraElement(tag)) {}
  FVector(AlgebraTag tag, std::vector<AlgebraElement> entries);
  /// Concatenated real coefficients, d per entry.
  static FVector from_coefficients(AlgebraTag tag, std::span<const double> coeffs);

  AlgebraTag tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const AlgebraElement& operator[](std::size_t i) const { return entries_[i]; }
  AlgebraElement& operator[](std::size_t i) { return entries_[i]; }
  std::span<const AlgebraElement> entries() const noexcept { return entries_; }

  std::vector<double> coefficients() const;

 private:
  AlgebraTag tag_ = AlgebraTag::Real;
  std::vector<AlgebraElement> entries_;
};

FVector operator+(const FVector& x, const FVector& y);
FVector operator-(const FVector& x, const FVector& y);
FVector operator-(const FVector& x);
FVector operator*(const FVector& x, double s);
FVector operator*(double s, const FVector& x);
bool operator==(const FVector& x, const FVector& y) noexcept;

/// Entrywise x_i * s.
FVector right_multiply(const FVector& x, const AlgebraElement& s);
/// Entrywise s * x_i.
FVector left_multiply(const AlgebraElement& s, const FVector& x);

/// <x, y> = sum_i x_i conj(y_i). Throws DomainError on size or tag mismatch.
AlgebraElement hermitian_form(const FVector& x, const FVector& y);
double norm2(const FVector& x) noexcept;
double norm(const FVector& x) noexcept;
double distance(const FVector& x, const FVector& y);
bool is_zero(const FVector& x, double tol = kDefaultTolerance) noexcept;

/// Square matrix over F, row-major.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(AlgebraTag tag, std::size_t n) : tag_(tag), n_(n), a_(n * n, AlgebraElement(tag)) {}
  static FMatrix identity(AlgebraTag tag, std::size_t n);
  /// Matrix whose columns are the given vectors.
  static FMatrix from_columns(std::span<const FVector> columns);

  AlgebraTag tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return n_; }
  const AlgebraElement& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  AlgebraElement& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  FVector column(std::size_t c) const;

 private:
  AlgebraTag tag_ = AlgebraTag::Real;
  std::size_t n_ = 0;
  std::vector<AlgebraElement> a_;
};

FMatrix operator*(const FMatrix& a, const FMatrix& b);
/// Column action A x.
FVector operator*(const FMatrix& a, const FVector& x);
FMatrix adjoint(const FMatrix& a);
double distance(const FMatrix& a, const FMatrix& b);
/// u^* u = I within tol.
bool is_unitary(const FMatrix& u, double tol = 1e-10);
/// Determinant for R and C matrices. Throws UnsupportedError for H and O.
std::complex<double> determinant(const FMatrix& a);

/// Gram-Schmidt (right scalars) completion of a unit column x to a unitary
/// matrix whose first column is x.
FMatrix complete_to_unitary(const FVector& x);
/// Orthonormalize columns in order, using <a,b>' = sum conj(a_i) b_i and
/// right scalar multiplication. Columns must be linearly independent.
FMatrix gram_schmidt(std::span<const FVector> columns);

}  // namespace paraharm
