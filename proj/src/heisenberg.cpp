#include "paraharm/heisenberg.hpp"

#include <algorithm>
#include <string>

#include "paraharm/errors.hpp"

namespace paraharm {

std::size_t NGroupSpec::dimension() const noexcept {
  const std::size_t d = paraharm::dimension(tag);
  return d * w_length() + (d - 1);
}

void NGroupSpec::validate() const {
  if (n < 2) throw DomainError("NGroupSpec: n must be at least 2, got " + std::to_string(n));
}

bool operator==(const NElement& a, const NElement& b) noexcept { return a.w == b.w && a.z == b.z; }

NElement n_identity(const NGroupSpec& spec) {
  spec.validate();
  return {FVector(spec.tag, spec.w_length()), AlgebraElement(spec.tag)};
}

void validate(const NGroupSpec& spec, const NElement& g, double tol) {
  spec.validate();
  if (g.w.tag() != spec.tag || g.z.tag() != spec.tag || g.w.size() != spec.w_length()) {
    throw DomainError("NElement does not belong to N(" + std::string(to_string(spec.tag)) + ", " +
                      std::to_string(spec.n) + ")");
  }
  if (!is_imaginary(g.z, tol)) throw DomainError("NElement: central coordinate must be purely imaginary");
}

NElement make_n_element(FVector w, AlgebraElement z) {
  NElement g{std::move(w), z};
  validate(g.spec(), g);
  return g;
}

NElement n_central(const NGroupSpec& spec, const AlgebraElement& z) {
  NElement g = n_identity(spec);
  g.z = z;
  validate(spec, g);
  return g;
}

namespace {
void require_same_group(const NElement& a, const NElement& b) {
  if (!(a.spec() == b.spec()) || a.z.tag() != b.z.tag()) throw DomainError("N elements from different groups");
}
}  // namespace

NElement n_multiply(const NElement& g1, const NElement& g2) {
  require_same_group(g1, g2);
  return {g1.w + g2.w, g1.z + g2.z + im(hermitian_form(g1.w, g2.w))};
}

NElement n_inverse(const NElement& g) { return {-g.w, -g.z}; }

NElement commutator(const NElement& g1, const NElement& g2) {
  return n_multiply(n_multiply(g1, g2), n_multiply(n_inverse(g1), n_inverse(g2)));
}

NElement commutator_closed_form(const NElement& g1, const NElement& g2) {
  require_same_group(g1, g2);
  return {FVector(g1.w.tag(), g1.w.size()), im(hermitian_form(g1.w, g2.w)) * 2.0};
}

bool is_central(const NElement& g, double tol) { return is_zero(g.w, tol); }

double distance(const NElement& a, const NElement& b) {
  require_same_group(a, b);
  return std::max(distance(a.w, b.w), distance(a.z, b.z));
}

std::vector<double> to_coordinates(const NElement& g) {
  std::vector<double> out = g.w.coefficients();
  for (std::size_t i = 1; i < g.z.dim(); ++i) out.push_back(g.z[i]);
  return out;
}

NElement from_coordinates(const NGroupSpec& spec, std::span<const double> coords) {
  spec.validate();
  if (coords.size() != spec.dimension()) {
    throw DomainError("N coordinates: expected " + std::to_string(spec.dimension()) + " values, got " +
                      std::to_string(coords.size()));
  }
  const std::size_t d = paraharm::dimension(spec.tag);
  const std::size_t nw = d * spec.w_length();
  NElement g{FVector::from_coefficients(spec.tag, coords.first(nw)), AlgebraElement(spec.tag)};
  for (std::size_t i = 1; i < d; ++i) g.z[i] = coords[nw + i - 1];
  return g;
}

}  // namespace paraharm
