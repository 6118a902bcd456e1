#include "paraharm/division_algebra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "paraharm/errors.hpp"

namespace paraharm {

namespace {

void require_same_tag(AlgebraTag a, AlgebraTag b, const char* op) {
  if (a != b) {
    throw DomainError(std::string(op) + ": algebra mismatch (" + std::string(to_string(a)) + " vs " +
                      std::string(to_string(b)) + ")");
  }
}

// Recursive doubling on raw coefficient blocks of length n (a power of two).
void cd_multiply(const double* x, const double* y, double* out, std::size_t n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  const double* a = x;
  const double* b = x + h;
  const double* c = y;
  const double* d = y + h;

  std::array<double, 4> cbar{};
  std::array<double, 4> dbar{};
  for (std::size_t i = 0; i < h; ++i) {
    cbar[i] = i == 0 ? c[i] : -c[i];
    dbar[i] = i == 0 ? d[i] : -d[i];
  }

  std::array<double, 4> ac{};
  std::array<double, 4> dbar_b{};
  std::array<double, 4> da{};
  std::array<double, 4> b_cbar{};
  cd_multiply(a, c, ac.data(), h);
  cd_multiply(dbar.data(), b, dbar_b.data(), h);
  cd_multiply(d, a, da.data(), h);
  cd_multiply(b, cbar.data(), b_cbar.data(), h);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - dbar_b[i];
    out[h + i] = da[i] + b_cbar[i];
  }
}

}  // namespace

std::string_view to_string(AlgebraTag tag) noexcept {
  switch (tag) {
    case AlgebraTag::Real: return "R";
    case AlgebraTag::Complex: return "C";
    case AlgebraTag::Quaternion: return "H";
    case AlgebraTag::Octonion: return "O";
  }
  return "?";
}

AlgebraTag parse_algebra_tag(std::string_view text) {
  if (text == "R") return AlgebraTag::Real;
  if (text == "C") return AlgebraTag::Complex;
  if (text == "H") return AlgebraTag::Quaternion;
  if (text == "O") return AlgebraTag::Octonion;
  throw DomainError("unknown algebra tag '" + std::string(text) + "' (expected R, C, H or O)");
}

AlgebraElement::AlgebraElement(AlgebraTag tag, std::initializer_list<double> coeffs)
    : AlgebraElement(tag, std::span<const double>(coeffs.begin(), coeffs.size())) {}

AlgebraElement::AlgebraElement(AlgebraTag tag, std::span<const double> coeffs) : tag_(tag) {
  if (coeffs.size() != dimension(tag)) {
    throw DomainError("AlgebraElement: expected " + std::to_string(dimension(tag)) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  }
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

AlgebraElement AlgebraElement::real(AlgebraTag tag, double value) noexcept {
  AlgebraElement x(tag);
  x.c_[0] = value;
  return x;
}

AlgebraElement AlgebraElement::basis(AlgebraTag tag, std::size_t index) {
  if (index >= dimension(tag)) throw DomainError("AlgebraElement::basis: index out of range");
  AlgebraElement x(tag);
  x.c_[index] = 1.0;
  return x;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_tag(tag_, rhs.tag_, "add");
  for (std::size_t i = 0; i < dim(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_tag(tag_, rhs.tag_, "subtract");
  for (std::size_t i = 0; i < dim(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) noexcept {
  for (std::size_t i = 0; i < dim(); ++i) c_[i] *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
AlgebraElement operator-(AlgebraElement x) noexcept { return x *= -1.0; }
AlgebraElement operator*(AlgebraElement x, double s) noexcept { return x *= s; }
AlgebraElement operator*(double s, AlgebraElement x) noexcept { return x *= s; }
AlgebraElement operator/(AlgebraElement x, double s) noexcept { return x *= 1.0 / s; }
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

bool operator==(const AlgebraElement& x, const AlgebraElement& y) noexcept {
  if (x.tag() != y.tag()) return false;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] != y[i]) return false;
  }
  return true;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_tag(x.tag(), y.tag(), "multiply");
  std::array<double, AlgebraElement::kMaxDim> out{};
  cd_multiply(x.coeffs().data(), y.coeffs().data(), out.data(), x.dim());
  return AlgebraElement(x.tag(), std::span<const double>(out.data(), x.dim()));
}

AlgebraElement conjugate(const AlgebraElement& x) noexcept {
  AlgebraElement r = x;
  for (std::size_t i = 1; i < x.dim(); ++i) r[i] = -r[i];
  return r;
}

double re(const AlgebraElement& x) noexcept { return x[0]; }

AlgebraElement im(const AlgebraElement& x) noexcept {
  AlgebraElement r = x;
  r[0] = 0.0;
  return r;
}

double norm2(const AlgebraElement& x) noexcept {
  double s = 0.0;
  for (double c : x.coeffs()) s += c * c;
  return s;
}

double norm(const AlgebraElement& x) noexcept { return std::sqrt(norm2(x)); }

AlgebraElement inverse(const AlgebraElement& x) {
  const double n2 = norm2(x);
  if (n2 == 0.0) throw DomainError("inverse: zero element");
  return conjugate(x) * (1.0 / n2);
}

bool is_imaginary(const AlgebraElement& x, double tol) noexcept { return std::abs(x[0]) <= tol; }

double distance(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_tag(x.tag(), y.tag(), "distance");
  double m = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

bool approx_equal(const AlgebraElement& x, const AlgebraElement& y, double tol) {
  return distance(x, y) <= tol;
}

std::complex<double> to_complex(const AlgebraElement& x) {
  if (x.tag() == AlgebraTag::Real) return {x[0], 0.0};
  if (x.tag() == AlgebraTag::Complex) return {x[0], x[1]};
  throw UnsupportedError("to_complex: only R and C elements have a complex view");
}

AlgebraElement from_complex(AlgebraTag tag, std::complex<double> z) {
  if (tag == AlgebraTag::Real) {
    if (z.imag() != 0.0) throw DomainError("from_complex: non-real value for R");
    return AlgebraElement::real(tag, z.real());
  }
  if (tag == AlgebraTag::Complex) return AlgebraElement(tag, {z.real(), z.imag()});
  throw UnsupportedError("from_complex: only R and C");
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) {
  os << to_string(x.tag()) << "(";
  for (std::size_t i = 0; i < x.dim(); ++i) os << (i ? ", " : "") << x[i];
  return os << ")";
}

FVector::FVector(AlgebraTag tag, std::vector<AlgebraElement> entries) : tag_(tag), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_same_tag(tag_, e.tag(), "FVector");
}

FVector FVector::from_coefficients(AlgebraTag tag, std::span<const double> coeffs) {
  const std::size_t d = dimension(tag);
  if (coeffs.size() % d != 0) throw DomainError("FVector: coefficient count not a multiple of algebra dimension");
  FVector v(tag, coeffs.size() / d);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = AlgebraElement(tag, coeffs.subspan(i * d, d));
  return v;
}

std::vector<double> FVector::coefficients() const {
  std::vector<double> out;
  out.reserve(size() * dimension(tag_));
  for (const auto& e : entries_) out.insert(out.end(), e.coeffs().begin(), e.coeffs().end());
  return out;
}

namespace {
void require_compatible(const FVector& x, const FVector& y, const char* op) {
  require_same_tag(x.tag(), y.tag(), op);
  if (x.size() != y.size()) throw DomainError(std::string(op) + ": length mismatch");
}
}  // namespace

FVector operator+(const FVector& x, const FVector& y) {
  require_compatible(x, y, "FVector add");
  FVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

FVector operator-(const FVector& x, const FVector& y) {
  require_compatible(x, y, "FVector subtract");
  FVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

FVector operator-(const FVector& x) { return x * -1.0; }

FVector operator*(const FVector& x, double s) {
  FVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] *= s;
  return r;
}

FVector operator*(double s, const FVector& x) { return x * s; }

bool operator==(const FVector& x, const FVector& y) noexcept {
  if (x.tag() != y.tag() || x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] == y[i])) return false;
  }
  return true;
}

FVector right_multiply(const FVector& x, const AlgebraElement& s) {
  FVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = multiply(x[i], s);
  return r;
}

FVector left_multiply(const AlgebraElement& s, const FVector& x) {
  FVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = multiply(s, x[i]);
  return r;
}

AlgebraElement hermitian_form(const FVector& x, const FVector& y) {
  require_compatible(x, y, "hermitian_form");
  AlgebraElement s(x.tag());
  for (std::size_t i = 0; i < x.size(); ++i) s += multiply(x[i], conjugate(y[i]));
  return s;
}

double norm2(const FVector& x) noexcept {
  double s = 0.0;
  for (const auto& e : x.entries()) s += norm2(e);
  return s;
}

double norm(const FVector& x) noexcept { return std::sqrt(norm2(x)); }

double distance(const FVector& x, const FVector& y) {
  require_compatible(x, y, "distance");
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, distance(x[i], y[i]));
  return m;
}

bool is_zero(const FVector& x, double tol) noexcept {
  for (const auto& e : x.entries()) {
    for (double c : e.coeffs()) {
      if (std::abs(c) > tol) return false;
    }
  }
  return true;
}

FMatrix FMatrix::identity(AlgebraTag tag, std::size_t n) {
  FMatrix m(tag, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = AlgebraElement::one(tag);
  return m;
}

FMatrix FMatrix::from_columns(std::span<const FVector> columns) {
  if (columns.empty()) throw DomainError("FMatrix::from_columns: no columns");
  const std::size_t n = columns.size();
  FMatrix m(columns[0].tag(), n);
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].size() != n || columns[c].tag() != m.tag()) {
      throw DomainError("FMatrix::from_columns: columns must be square and share the algebra");
    }
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

FVector FMatrix::column(std::size_t c) const {
  FVector v(tag_, n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  require_same_tag(a.tag(), b.tag(), "FMatrix multiply");
  if (a.size() != b.size()) throw DomainError("FMatrix multiply: size mismatch");
  const std::size_t n = a.size();
  FMatrix r(a.tag(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement s(a.tag());
      for (std::size_t k = 0; k < n; ++k) s += multiply(a(i, k), b(k, j));
      r(i, j) = s;
    }
  }
  return r;
}

FVector operator*(const FMatrix& a, const FVector& x) {
  require_same_tag(a.tag(), x.tag(), "FMatrix apply");
  if (a.size() != x.size()) throw DomainError("FMatrix apply: size mismatch");
  FVector r(a.tag(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    AlgebraElement s(a.tag());
    for (std::size_t k = 0; k < a.size(); ++k) s += multiply(a(i, k), x[k]);
    r[i] = s;
  }
  return r;
}

FMatrix adjoint(const FMatrix& a) {
  FMatrix r(a.tag(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = conjugate(a(j, i));
  }
  return r;
}

double distance(const FMatrix& a, const FMatrix& b) {
  require_same_tag(a.tag(), b.tag(), "FMatrix distance");
  if (a.size() != b.size()) throw DomainError("FMatrix distance: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, distance(a(i, j), b(i, j)));
  }
  return m;
}

bool is_unitary(const FMatrix& u, double tol) {
  return distance(adjoint(u) * u, FMatrix::identity(u.tag(), u.size())) <= tol;
}

std::complex<double> determinant(const FMatrix& a) {
  if (a.tag() != AlgebraTag::Real && a.tag() != AlgebraTag::Complex) {
    throw UnsupportedError("determinant: only defined here for R and C matrices");
  }
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = to_complex(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  return m.determinant();
}

FMatrix gram_schmidt(std::span<const FVector> columns) {
  std::vector<FVector> q;
  q.reserve(columns.size());
  for (const auto& col : columns) {
    FVector v = col;
    // Two passes keep the result orthonormal to rounding.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : q) {
        // e (e^* v)
        AlgebraElement coeff(v.tag());
        for (std::size_t r = 0; r < v.size(); ++r) coeff += multiply(conjugate(e[r]), v[r]);
        v = v - right_multiply(e, coeff);
      }
    }
    const double nv = norm(v);
    if (nv < 1e-12) throw DomainError("gram_schmidt: columns are linearly dependent");
    q.push_back(v * (1.0 / nv));
  }
  return FMatrix::from_columns(q);
}

FMatrix complete_to_unitary(const FVector& x) {
  const double nx = norm(x);
  if (std::abs(nx - 1.0) > 1e-10) throw DomainError("complete_to_unitary: expected a unit vector");
  const std::size_t n = x.size();
  // The standard basis vector most aligned with x is the one dropped.
  std::size_t drop = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (norm2(x[i]) > norm2(x[drop])) drop = i;
  }
  std::vector<FVector> cols{x};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop) continue;
    FVector e(x.tag(), n);
    e[i] = AlgebraElement::one(x.tag());
    cols.push_back(e);
  }
  return gram_schmidt(cols);
}

}  // namespace paraharm
