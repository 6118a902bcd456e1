#pragma once

// Group descriptors and coordinate charts with their Haar densities.
//
// Coordinates:
//   P3x3  (lambda, a, b, c)
//   AXB   (a, b)
//   N     (w coefficients, Im z coefficients)
//   MN    N coordinates; M is compact with normalized Haar measure and is
//         left out of the chart
//   AN, P (alpha, N coordinates); for P the compact M factor is left out

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paraharm/heisenberg.hpp"
#include "paraharm/parabolic.hpp"

namespace paraharm {

enum class GroupKind { P3x3, AXB, N, MN, AN, P };

std::string_view to_string(GroupKind k) noexcept;

/// Text form: "P3x3", "AXB", or "<N|MN|AN|P>:<R|C|H|O>:<n>", e.g. "AN:H:3".
struct GroupDescriptor {
  GroupKind kind = GroupKind::P3x3;
  AlgebraTag tag = AlgebraTag::Real;
  int n = 0;

  static GroupDescriptor p3x3() noexcept { return {GroupKind::P3x3, AlgebraTag::Real, 0}; }
  static GroupDescriptor axb() noexcept { return {GroupKind::AXB, AlgebraTag::Real, 0}; }
  static GroupDescriptor of(GroupKind kind, NGroupSpec spec) noexcept { return {kind, spec.tag, spec.n}; }

  bool has_n_factor() const noexcept { return kind != GroupKind::P3x3 && kind != GroupKind::AXB; }
  bool has_a_factor() const noexcept { return kind == GroupKind::AN || kind == GroupKind::P; }
  NGroupSpec n_spec() const;
  std::size_t chart_dimension() const;
  /// Throws DomainError for bad n or a malformed combination.
  void validate() const;
  std::string to_string() const;
  static GroupDescriptor parse(std::string_view text);

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

using Point = std::vector<double>;

/// Closed-form left Haar density in chart coordinates.
double left_haar_density(const GroupDescriptor& g, std::span<const double> point);
double right_haar_density(const GroupDescriptor& g, std::span<const double> point);
/// Delta with right Haar = Delta^{-1} left Haar.
double modular_function(const GroupDescriptor& g, std::span<const double> point);

/// |det| of the linear map x -> h.x on N in real coordinates, assembled
/// column by column from basis images.
double action_determinant(const NGroupSpec& spec, const MAElement& h);

/// Group law in chart coordinates. Available for P3x3, AXB, N and AN.
class GroupChart {
 public:
  explicit GroupChart(GroupDescriptor g);

  const GroupDescriptor& group() const noexcept { return g_; }
  std::size_t dimension() const noexcept { return dim_; }
  /// True for coordinates ranging over (0, inf): lambda, a or alpha.
  bool is_positive(std::size_t i) const noexcept { return i == 0 && (g_.kind == GroupKind::P3x3 || g_.kind == GroupKind::AXB || g_.kind == GroupKind::AN); }

  Point identity() const;
  Point multiply(std::span<const double> x, std::span<const double> y) const;
  Point inverse(std::span<const double> x) const;
  double left_density(std::span<const double> x) const { return left_haar_density(g_, x); }
  double right_density(std::span<const double> x) const { return right_haar_density(g_, x); }
  double modular(std::span<const double> x) const { return modular_function(g_, x); }
  /// Max-coordinate distance.
  static double distance(std::span<const double> x, std::span<const double> y);

 private:
  GroupDescriptor g_;
  std::size_t dim_ = 0;
};

PMatrixElement to_p_element(std::span<const double> x);
Point to_point(const PMatrixElement& g);
SemidirectElement to_an_element(const NGroupSpec& spec, std::span<const double> x);
Point to_point(const SemidirectElement& g);

}  // namespace paraharm
